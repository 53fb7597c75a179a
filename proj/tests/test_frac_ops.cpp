#include <doctest.h>

#include <cmath>

#include "fracaim/frac_ops.hpp"

namespace {

using fracaim::FractionalOrder;
using fracaim::Trajectory;
using fracaim::UniformGrid;
using fracaim::Vector;

// Reference values computed independently with 40-digit arithmetic.
constexpr double kSumW10000Half = 0.00564182531222042;     // sum_{j<=1e4} w_j, alpha=0.5
constexpr double kP03At2p5 = 0.043492392100269307;         // p_0.3(2.5)
constexpr double kInvSqrtPi = 0.564189583547756287;        // 1/Gamma(0.5)
constexpr double kTwoOverSqrtPi = 1.128379167095512574;    // 1/Gamma(1.5)
constexpr double kTwoOverGamma2p7 = 1.294761653557253780;  // 2/Gamma(2.7)
constexpr double kML05At1 = 5.008980080762283;             // E_0.5(1)

}  // namespace

TEST_CASE("fractional order validates its range") {
  CHECK_THROWS_AS(FractionalOrder(0.0), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder(1.0), std::invalid_argument);
  CHECK_THROWS_AS(FractionalOrder(-0.2), std::invalid_argument);
  const FractionalOrder a(0.3);
  CHECK(a.value() == doctest::Approx(0.3));
  CHECK(a.complement() == doctest::Approx(0.7));
}

TEST_CASE("weight table signs and partial sums") {
  const auto table = fracaim::gl_weights(FractionalOrder(0.3), 200);
  CHECK(table[0] == 1.0);
  for (std::size_t j = 1; j <= 200; ++j) CHECK(table[j] < 0.0);
  double prev = table.partial_sum(0);
  for (std::size_t m = 1; m <= 200; ++m) {
    const double cur = table.partial_sum(m);
    CHECK(cur > 0.0);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("weight recurrence matches the direct product formula") {
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto table = fracaim::gl_weights(FractionalOrder(a), 50);
    long double direct = 1.0L;
    for (int j = 1; j <= 50; ++j) {
      direct *= (static_cast<long double>(j) - 1.0L - static_cast<long double>(a)) /
                static_cast<long double>(j);
      const double expected = static_cast<double>(direct);
      CHECK(table[static_cast<std::size_t>(j)] ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("long-range partial sum against the frozen reference") {
  const auto table = fracaim::gl_weights(FractionalOrder(0.5), 10000);
  CHECK(table.partial_sum(10000) == doctest::Approx(kSumW10000Half).epsilon(1e-10));
}

TEST_CASE("shared weight tables are memoized") {
  const auto a = fracaim::shared_gl_weights(FractionalOrder(0.4), 100);
  const auto b = fracaim::shared_gl_weights(FractionalOrder(0.4), 100);
  CHECK(a.get() == b.get());
  const auto c = fracaim::shared_gl_weights(FractionalOrder(0.4), 101);
  CHECK(a.get() != c.get());
}

TEST_CASE("difference of x(t) = t computed by hand") {
  // step 0.5, h = 0.5, alpha = 0.5; at t = 1: w0 * 1 + w1 * 0.5 + w2 * 0.
  const UniformGrid grid(2.0, 0.5);
  const auto x = Trajectory::sample_scalar(grid, [](double t) { return t; });
  const FractionalOrder alpha(0.5);
  const Vector d = fracaim::gl_difference(x, alpha, 0.5, 2);
  CHECK(d[0] == doctest::Approx(1.0 - 0.5 * 0.5).epsilon(1e-14));
  const Vector dd = fracaim::divided_gl_difference(x, alpha, 0.5, 2);
  CHECK(dd[0] == doctest::Approx(std::pow(0.5, -0.5) * 0.75).epsilon(1e-14));
}

TEST_CASE("difference operator is linear") {
  const UniformGrid grid(2.0, 0.1);
  const auto x = Trajectory::sample_scalar(grid, [](double t) { return std::sin(t); });
  const auto z = Trajectory::sample_scalar(grid, [](double t) { return t * t; });
  const auto combo = Trajectory::sample_scalar(
      grid, [](double t) { return 2.0 * std::sin(t) - 3.0 * t * t; });
  const FractionalOrder alpha(0.7);
  for (std::size_t k : {std::size_t{3}, std::size_t{10}, std::size_t{20}}) {
    const Vector lhs = fracaim::gl_difference(combo, alpha, 0.2, k);
    const Vector rhs = 2.0 * fracaim::gl_difference(x, alpha, 0.2, k) -
                       3.0 * fracaim::gl_difference(z, alpha, 0.2, k);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("difference rejects incommensurate lags and bad indices") {
  const UniformGrid grid(1.0, 0.1);
  const auto x = Trajectory::sample_scalar(grid, [](double t) { return t; });
  CHECK_THROWS_AS(fracaim::gl_difference(x, FractionalOrder(0.5), 0.15, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(fracaim::gl_difference(x, FractionalOrder(0.5), 0.1, 11),
                  std::invalid_argument);
}

TEST_CASE("kernel closed form on the first unit interval") {
  // For 0 < tau <= 1 only the j = 0 term contributes.
  CHECK(fracaim::p_alpha_kernel(FractionalOrder(0.5), 1.0) ==
        doctest::Approx(kInvSqrtPi).epsilon(1e-14));
  CHECK(fracaim::p_alpha_kernel(FractionalOrder(0.5), 0.25) ==
        doctest::Approx(std::pow(0.25, -0.5) * kInvSqrtPi).epsilon(1e-14));
  CHECK(fracaim::p_alpha_kernel(FractionalOrder(0.3), 2.5) ==
        doctest::Approx(kP03At2p5).epsilon(1e-12));
  CHECK_THROWS_AS(fracaim::p_alpha_kernel(FractionalOrder(0.5), 0.0),
                  std::invalid_argument);
}

TEST_CASE("kernel integral approaches one") {
  for (double a : {0.3, 0.5, 0.7}) {
    const auto part =
        fracaim::p_alpha_partial_integral(FractionalOrder(a), 64.0, 0.01);
    CHECK(std::abs(part.signed_integral - 1.0) < 0.05);
    CHECK(part.abs_integral >= std::abs(part.signed_integral) - 1e-12);
  }
}

TEST_CASE("kernel integral refines under a doubling of the horizon") {
  const FractionalOrder a(0.5);
  const double e8 =
      std::abs(fracaim::p_alpha_partial_integral(a, 8.0, 0.01).signed_integral - 1.0);
  const double e64 =
      std::abs(fracaim::p_alpha_partial_integral(a, 64.0, 0.01).signed_integral - 1.0);
  CHECK(e64 <= e8 + 1e-12);
}

TEST_CASE("convolution route agrees with the divided difference") {
  // x(t) = t has fractional derivative t^{1-a}/Gamma(2-a); both routes of the
  // identity must coincide at grid points up to quadrature error.
  const FractionalOrder alpha(0.5);
  const double h = 0.5;
  const UniformGrid grid(2.0, h);
  const auto x = Trajectory::sample_scalar(grid, [](double t) { return t; });
  const auto phi = [](double t) {
    Vector v(1);
    v[0] = t <= 0.0 ? 0.0 : kTwoOverSqrtPi * std::sqrt(t);
    return v;
  };
  for (std::size_t k = 1; k < grid.count(); ++k) {
    const Vector lhs = fracaim::divided_gl_difference(x, alpha, h, k);
    const Vector rhs = fracaim::p_alpha_convolution(alpha, phi, grid.node(k), h, 1e-3);
    CHECK((lhs - rhs).norm() < 1e-3);
  }
}

TEST_CASE("fractional integral of a constant is exact") {
  const UniformGrid grid(2.0, 0.1);
  const auto one = Trajectory::sample_scalar(grid, [](double) { return 1.0; });
  for (double a : {0.3, 0.7}) {
    const FractionalOrder alpha(a);
    for (std::size_t k : {std::size_t{1}, std::size_t{7}, std::size_t{20}}) {
      const double t = grid.node(k);
      const double expected = std::pow(t, a) / std::tgamma(a + 1.0);
      CHECK(fracaim::rl_integral(one, alpha, k)[0] ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("fractional integral is monotone for monotone inputs") {
  const UniformGrid grid(2.0, 0.05);
  const auto ramp = Trajectory::sample_scalar(grid, [](double t) { return t; });
  for (double a : {0.3, 0.7}) {
    double prev = 0.0;
    for (std::size_t k = 0; k < grid.count(); ++k) {
      const double cur = fracaim::rl_integral(ramp, FractionalOrder(a), k)[0];
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("derivative of smooth trajectories matches the power rule") {
  const UniformGrid grid(2.0, 1e-3);
  const auto sq = Trajectory::sample_scalar(grid, [](double t) { return t * t; });
  const FractionalOrder alpha(0.3);
  const std::size_t k = 1500;  // t = 1.5
  const double t = grid.node(k);
  const double expected = kTwoOverGamma2p7 * std::pow(t, 1.7);
  CHECK(fracaim::caputo_derivative_of_lipschitz(sq, alpha, k)[0] ==
        doctest::Approx(expected).epsilon(2e-3));

  const auto lin = Trajectory::sample_scalar(grid, [](double t2) { return t2; });
  const FractionalOrder half(0.5);
  CHECK(fracaim::caputo_derivative_of_lipschitz(lin, half, k)[0] ==
        doctest::Approx(kTwoOverSqrtPi * std::sqrt(t)).epsilon(2e-3));
}

TEST_CASE("Mittag-Leffler series against frozen references") {
  CHECK(fracaim::mittag_leffler(FractionalOrder(0.5), 0.0) == 1.0);
  CHECK(fracaim::mittag_leffler(FractionalOrder(0.5), 1.0) ==
        doctest::Approx(kML05At1).epsilon(1e-12));
  // At order one the series is the exponential.
  for (double z : {-2.0, -0.5, 0.3, 1.7}) {
    CHECK(fracaim::mittag_leffler_raw(1.0, z) ==
          doctest::Approx(std::exp(z)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(fracaim::mittag_leffler_raw(-0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fracaim::mittag_leffler_raw(0.5, 2e4), std::invalid_argument);
}
