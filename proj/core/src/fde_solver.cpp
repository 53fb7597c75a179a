#include "fracaim/fde_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracaim/gl_weights.hpp"

namespace fracaim {

namespace {

void check_growth(const Vector& fx, const Vector& x, double guard, std::size_t k,
                  const char* which) {
  if (!fx.allFinite() || fx.norm() > (1.0 + x.norm()) * guard)
    throw DivergedError(std::string(which) + ": growth guard violated", k);
}

// b_m = step^alpha [(m+1)^alpha - m^alpha] / Gamma(alpha+1)
std::vector<double> euler_kernel(double alpha, double step, std::size_t n) {
  std::vector<double> b(n);
  const double scale = std::pow(step, alpha) / std::tgamma(alpha + 1.0);
  for (std::size_t m = 0; m < n; ++m)
    b[m] = scale * (std::pow(static_cast<double>(m) + 1.0, alpha) -
                    std::pow(static_cast<double>(m), alpha));
  return b;
}

}  // namespace

Trajectory solve_caputo(const CaputoProblem& problem, const UniformGrid& grid) {
  if (std::abs(grid.t_end() - problem.horizon) > 1e-9 * std::max(1.0, problem.horizon))
    throw std::invalid_argument("solve_caputo: grid horizon does not match the problem");

  const std::size_t n = grid.count();
  const auto b = euler_kernel(problem.alpha.value(), grid.step(), n);

  std::vector<Vector> x;
  x.reserve(n);
  x.push_back(problem.x0);
  std::vector<Vector> f_hist;
  f_hist.reserve(n);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    Vector fk = problem.dynamics(grid.node(k), x[k]);
    check_growth(fk, x[k], problem.growth_guard, k, "solve_caputo");
    f_hist.push_back(std::move(fk));
    Vector next = problem.x0;
    for (std::size_t j = 0; j <= k; ++j) next += b[k - j] * f_hist[j];
    x.push_back(std::move(next));
  }
  return Trajectory(grid, static_cast<std::size_t>(problem.x0.size()), std::move(x));
}

Trajectory solve_retarded(const RetardedProblem& problem, const UniformGrid& grid) {
  const auto& base = problem.base;
  if (std::abs(grid.t_end() - base.horizon) > 1e-9 * std::max(1.0, base.horizon))
    throw std::invalid_argument("solve_retarded: grid horizon does not match the problem");
  const std::size_t lag = grid.steps_per(problem.delay);

  const std::size_t n = grid.count();
  const auto dim = static_cast<Eigen::Index>(base.x0.size());
  const FractionalOrder gl_order(base.alpha.complement());
  auto weights = shared_gl_weights(gl_order, static_cast<std::int64_t>(n / lag));
  const double hfac = std::pow(problem.delay, base.alpha.value() - 1.0);

  std::vector<Vector> y;
  y.reserve(n);
  y.push_back(Vector::Zero(dim));

  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t m = k / lag;
    Vector gl = Vector::Zero(dim);
    for (std::size_t j = 0; j <= m; ++j) gl += (*weights)[j] * y[k - j * lag];
    const Vector state = base.x0 + hfac * gl;
    Vector fk = base.dynamics(grid.node(k), state);
    check_growth(fk, state, base.growth_guard, k, "solve_retarded");
    y.push_back(y[k] + grid.step() * fk);
  }
  return Trajectory(grid, static_cast<std::size_t>(base.x0.size()), std::move(y));
}

Trajectory reconstruct(const RetardedProblem& problem, const Trajectory& y) {
  const auto& base = problem.base;
  const std::size_t lag = y.grid().steps_per(problem.delay);
  if (static_cast<Eigen::Index>(y.dim()) != base.x0.size())
    throw std::invalid_argument("reconstruct: state dimension mismatch");

  const std::size_t n = y.grid().count();
  const FractionalOrder gl_order(base.alpha.complement());
  auto weights = shared_gl_weights(gl_order, static_cast<std::int64_t>(n / lag));
  const double hfac = std::pow(problem.delay, base.alpha.value() - 1.0);

  std::vector<Vector> xt;
  xt.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t m = k / lag;
    Vector gl = Vector::Zero(static_cast<Eigen::Index>(y.dim()));
    for (std::size_t j = 0; j <= m; ++j) gl += (*weights)[j] * y[k - j * lag];
    xt.push_back(base.x0 + hfac * gl);
  }
  return Trajectory(y.grid(), y.dim(), std::move(xt));
}

double sup_error(const Trajectory& a, const Trajectory& b) {
  if (!(a.grid() == b.grid()) || a.dim() != b.dim())
    throw std::invalid_argument("sup_error: trajectories must share grid and dimension");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.grid().count(); ++k)
    worst = std::max(worst, (a[k] - b[k]).norm());
  return worst;
}

}  // namespace fracaim
