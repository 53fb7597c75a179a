#include "fracaim/frac_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracaim/errors.hpp"

namespace fracaim {

namespace {

double p_alpha_eval(const GLWeightTable& table, double tau) {
  // sum over 0 <= j < tau of w_j (tau - j)^{alpha-1}, divided by Gamma(alpha)
  const double a = table.alpha();
  double s = 0.0;
  for (std::size_t j = 0; static_cast<double>(j) < tau && j < table.size(); ++j)
    s += table[j] * std::pow(tau - static_cast<double>(j), a - 1.0);
  return s / std::tgamma(a);
}

}  // namespace

Vector gl_difference(const Trajectory& x, FractionalOrder alpha, double h,
                     std::size_t t_index) {
  if (t_index >= x.grid().count())
    throw std::invalid_argument("gl_difference: index out of range");
  const std::size_t lag = x.grid().steps_per(h);
  const std::size_t m = t_index / lag;  // [t/h]
  auto table = shared_gl_weights(alpha, static_cast<std::int64_t>(x.grid().count() / lag));
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(x.dim()));
  for (std::size_t j = 0; j <= m; ++j) sum += (*table)[j] * x[t_index - j * lag];
  return sum;
}

Vector divided_gl_difference(const Trajectory& x, FractionalOrder alpha, double h,
                             std::size_t t_index) {
  return std::pow(h, -alpha.value()) * gl_difference(x, alpha, h, t_index);
}

double p_alpha_kernel(FractionalOrder alpha, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("p_alpha_kernel: tau must be positive");
  auto table =
      shared_gl_weights(alpha, static_cast<std::int64_t>(std::ceil(tau)) + 1);
  return p_alpha_eval(*table, tau);
}

PartialIntegral p_alpha_partial_integral(FractionalOrder alpha, double upper,
                                         double quad_step) {
  if (!(upper > 0.0))
    throw std::invalid_argument("p_alpha_partial_integral: upper must be positive");
  if (!(quad_step > 0.0))
    throw std::invalid_argument("p_alpha_partial_integral: quad_step must be positive");

  const double a = alpha.value();
  const double gamma_a = std::tgamma(a);
  auto table = shared_gl_weights(alpha, static_cast<std::int64_t>(std::ceil(upper)) + 1);

  double signed_sum = 0.0;
  double abs_sum = 0.0;

  const auto nseg = static_cast<std::size_t>(std::ceil(upper));
  for (std::size_t seg = 0; seg < nseg; ++seg) {
    const double width = std::min(static_cast<double>(seg) + 1.0, upper) -
                         static_cast<double>(seg);
    // Dyadic refinement toward the left endpoint where (tau-seg)^{alpha-1} blows up.
    const int levels = std::clamp(
        static_cast<int>(std::ceil(std::log2(std::max(width / quad_step, 2.0)))) + 4, 2, 60);
    double hi = width;
    for (int level = 0; level < levels; ++level) {
      const double lo = hi * 0.5;
      const auto cells =
          std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / quad_step)));
      const double dw = (hi - lo) / static_cast<double>(cells);
      for (std::size_t c = 0; c < cells; ++c) {
        const double sigma = lo + (static_cast<double>(c) + 0.5) * dw;
        const double p = p_alpha_eval(*table, static_cast<double>(seg) + sigma);
        signed_sum += p * dw;
        abs_sum += std::abs(p) * dw;
      }
      hi = lo;
    }
    // Sliver (0, hi]: singular term in closed form, smooth remainder by midpoint.
    const double w_seg = (*table)[seg];
    const double singular = w_seg * std::pow(hi, a) / (a * gamma_a);
    const double mid = static_cast<double>(seg) + 0.5 * hi;
    const double smooth =
        (p_alpha_eval(*table, mid) - w_seg * std::pow(0.5 * hi, a - 1.0) / gamma_a) * hi;
    signed_sum += singular + smooth;
    abs_sum += std::abs(singular + smooth);
  }

  return {signed_sum, abs_sum};
}

Vector p_alpha_convolution(FractionalOrder alpha, const std::function<Vector(double)>& phi,
                           double t, double h, double quad_step) {
  if (!(h > 0.0)) throw std::invalid_argument("p_alpha_convolution: h must be positive");
  if (!(quad_step > 0.0))
    throw std::invalid_argument("p_alpha_convolution: quad_step must be positive");

  const double upper = t / h;
  Vector sum = Vector::Zero(phi(t).size());
  if (!(upper > 0.0)) return sum;

  const double a = alpha.value();
  const double gamma_a = std::tgamma(a);
  auto table = shared_gl_weights(alpha, static_cast<std::int64_t>(std::ceil(upper)) + 1);

  const auto nseg = static_cast<std::size_t>(std::ceil(upper));
  for (std::size_t seg = 0; seg < nseg; ++seg) {
    const double width = std::min(static_cast<double>(seg) + 1.0, upper) -
                         static_cast<double>(seg);
    const int levels = std::clamp(
        static_cast<int>(std::ceil(std::log2(std::max(width / quad_step, 2.0)))) + 4, 2, 60);
    double hi = width;
    for (int level = 0; level < levels; ++level) {
      const double lo = hi * 0.5;
      const auto cells =
          std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi - lo) / quad_step)));
      const double dw = (hi - lo) / static_cast<double>(cells);
      for (std::size_t c = 0; c < cells; ++c) {
        const double tau = static_cast<double>(seg) + lo + (static_cast<double>(c) + 0.5) * dw;
        sum += (p_alpha_eval(*table, tau) * dw) * phi(t - tau * h);
      }
      hi = lo;
    }
    const double w_seg = (*table)[seg];
    const double mid_tau = static_cast<double>(seg) + 0.5 * hi;
    sum += (w_seg * std::pow(hi, a) / (a * gamma_a)) * phi(t - static_cast<double>(seg) * h);
    sum += ((p_alpha_eval(*table, mid_tau) - w_seg * std::pow(0.5 * hi, a - 1.0) / gamma_a) *
            hi) *
           phi(t - mid_tau * h);
  }
  return sum;
}

Vector rl_integral(const Trajectory& phi, FractionalOrder alpha, std::size_t t_index) {
  if (t_index >= phi.grid().count())
    throw std::invalid_argument("rl_integral: index out of range");
  const double a = alpha.value();
  const double step = phi.grid().step();
  const double scale = std::pow(step, a) / std::tgamma(a + 1.0);
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(phi.dim()));
  for (std::size_t k = 0; k < t_index; ++k) {
    const double lag = static_cast<double>(t_index - k);
    sum += (std::pow(lag, a) - std::pow(lag - 1.0, a)) * phi[k];
  }
  return scale * sum;
}

Vector caputo_derivative_of_lipschitz(const Trajectory& x, FractionalOrder alpha,
                                      std::size_t t_index) {
  if (t_index >= x.grid().count())
    throw std::invalid_argument("caputo_derivative_of_lipschitz: index out of range");
  const double step = x.grid().step();
  std::vector<Vector> diffs;
  diffs.reserve(x.grid().count());
  for (std::size_t k = 0; k + 1 < x.grid().count(); ++k)
    diffs.push_back((x[k + 1] - x[k]) / step);
  diffs.push_back(diffs.empty() ? Vector::Zero(static_cast<Eigen::Index>(x.dim()))
                                : diffs.back());
  // Subtracting x(0) leaves the forward differences unchanged, so the Caputo
  // derivative reduces to the R-L integral of order 1-alpha of x'.
  Trajectory phi(x.grid(), x.dim(), std::move(diffs));
  return rl_integral(phi, FractionalOrder(alpha.complement()), t_index);
}

double mittag_leffler_raw(double alpha, double z) {
  if (!(alpha > 0.0)) throw std::invalid_argument("mittag_leffler: order must be positive");
  if (std::abs(z) > 1e4) throw std::invalid_argument("mittag_leffler: argument too large");
  if (z == 0.0) return 1.0;

  const double log_abs_z = std::log(std::abs(z));
  double sum = 0.0;
  double prev_mag = 0.0;
  bool decreasing = false;
  constexpr int kMaxTerms = 10000;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double mag = std::exp(static_cast<double>(k) * log_abs_z -
                                std::lgamma(alpha * static_cast<double>(k) + 1.0));
    const double term = (z < 0.0 && (k % 2 == 1)) ? -mag : mag;
    sum += term;
    if (k > 0 && mag < prev_mag) decreasing = true;
    if (decreasing && mag <= 1e-16 * std::max(1.0, std::abs(sum))) return sum;
    prev_mag = mag;
  }
  throw NumericError("mittag_leffler: series did not converge");
}

double mittag_leffler(FractionalOrder alpha, double z) {
  return mittag_leffler_raw(alpha.value(), z);
}

}  // namespace fracaim
