// Acceptance gate: one check per release criterion, one printed line each.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fracaim/conflict_sim.hpp"
#include "fracaim/frac_ops.hpp"
#include "fracaim/harness.hpp"

namespace {

using fracaim::AimingPartition;
using fracaim::ConflictDynamics;
using fracaim::ControlGrid;
using fracaim::FractionalOrder;
using fracaim::Trajectory;
using fracaim::UniformGrid;
using fracaim::Vector;

bool g_all_ok = true;

void report(int number, const char* title, bool ok, const std::string& detail = "") {
  std::printf("criterion %d: %-48s %s%s%s\n", number, title, ok ? "pass" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  g_all_ok = g_all_ok && ok;
}

std::string out_dir(const char* leaf) {
  auto dir = std::filesystem::temp_directory_path() / leaf;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// --- 1: plain-scenario refinement regression ---------------------------------

void criterion1() {
  fracaim::RunConfig config;
  config.scenario = "example1";
  config.euler_step = 0.001;
  config.h_values = {0.1, 0.01, 0.001};
  config.out_dir = out_dir("fracaim_acc1");
  const auto rep = fracaim::run_example1(config);

  const double expected[] = {0.9585, 0.4232, 0.0436};
  bool ok = rep.cases.size() == 3;
  std::string detail;
  for (std::size_t i = 0; ok && i < 3; ++i) {
    const double err = rep.cases[i].sup_error;
    ok = ok && std::abs(err - expected[i]) <= 0.25 * expected[i];
    if (i > 0) ok = ok && err < rep.cases[i - 1].sup_error;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.4f", i ? " " : "", err);
    detail += buf;
  }
  report(1, "plain scenario refinement regression", ok, detail);
}

// --- 2: aiming regression ----------------------------------------------------

void criterion2() {
  fracaim::RunConfig config;
  config.scenario = "example2";
  config.euler_step = 0.001;
  config.h_values = {0.1, 0.01};
  config.deltas = {0.02, 0.005};
  config.out_dir = out_dir("fracaim_acc2");
  const auto rep = fracaim::run_example2(config);

  const double expected[] = {0.114, 0.046};
  bool ok = rep.cases.size() == 2;
  std::string detail;
  for (std::size_t i = 0; ok && i < 2; ++i) {
    const double err = rep.cases[i].sup_error;
    ok = ok && std::abs(err - expected[i]) <= 0.30 * expected[i];
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.4f", i ? " " : "", err);
    detail += buf;
  }
  if (ok) ok = rep.cases[1].sup_error < rep.cases[0].sup_error;
  report(2, "mutual aiming regression", ok, detail);
}

// --- 3: two routes of the kernel identity ------------------------------------

void criterion3() {
  bool ok = true;
  double worst_ratio = 0.0;
  for (double a : {0.3, 0.5, 0.7}) {
    const FractionalOrder alpha(a);
    for (int power = 1; power <= 2; ++power) {
      // phi is the exact fractional derivative of t^power.
      const double coeff = power == 1 ? 1.0 / std::tgamma(2.0 - a)
                                      : 2.0 / std::tgamma(3.0 - a);
      const double expo = static_cast<double>(power) - a;
      const auto phi = [&](double t) {
        Vector v(1);
        v[0] = t <= 0.0 ? 0.0 : coeff * std::pow(t, expo);
        return v;
      };
      for (double h : {0.5, 0.1}) {
        const UniformGrid grid(2.0, h);
        const auto x = Trajectory::sample_scalar(
            grid, [&](double t) { return std::pow(t, power); });
        for (std::size_t k = 1; k < grid.count(); ++k) {
          const double t = grid.node(k);
          const Vector lhs = fracaim::divided_gl_difference(x, alpha, h, k);
          const Vector coarse = fracaim::p_alpha_convolution(alpha, phi, t, h, 2e-3);
          const Vector fine = fracaim::p_alpha_convolution(alpha, phi, t, h, 5e-4);
          const double self_error = std::max((coarse - fine).norm(), 1e-12);
          const double gap = (lhs - fine).norm();
          worst_ratio = std::max(worst_ratio, gap / self_error);
          ok = ok && gap <= 5.0 * self_error;
        }
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst gap/estimate %.3f", worst_ratio);
  report(3, "kernel identity vs quadrature estimate", ok, buf);
}

// --- 4: kernel normalization -------------------------------------------------

void criterion4() {
  // Doubling study (upper = 8, 16, 32, 64, quad_step 0.01) gave residuals
  // 0.0546, 0.0300, 0.0131, 0.0003 for alpha = 0.5; 64 is the calibrated
  // upper limit for all three orders below.
  bool ok = true;
  std::string detail;
  for (double a : {0.3, 0.5, 0.7}) {
    const auto part = fracaim::p_alpha_partial_integral(FractionalOrder(a), 64.0, 0.01);
    const double residual = std::abs(part.signed_integral - 1.0);
    ok = ok && residual < 0.05;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%.4f", detail.empty() ? "" : " ", residual);
    detail += buf;
  }
  report(4, "kernel integral within 0.05 of one", ok, detail);
}

// --- 5: difference-to-derivative convergence ---------------------------------

void criterion5() {
  struct TestFn {
    double (*x)(double);
    double (*dx_a3)(double);  // fractional derivative, alpha = 0.3
    double (*dx_a7)(double);  // fractional derivative, alpha = 0.7
  };
  // For sin t the reference is computed numerically below; the analytic slots
  // are unused (nullptr).
  static const TestFn fns[] = {
      {[](double t) { return t; },
       [](double t) { return std::pow(t, 0.7) / std::tgamma(1.7); },
       [](double t) { return std::pow(t, 0.3) / std::tgamma(1.3); }},
      {[](double t) { return t * t; },
       [](double t) { return 2.0 * std::pow(t, 1.7) / std::tgamma(2.7); },
       [](double t) { return 2.0 * std::pow(t, 1.3) / std::tgamma(2.3); }},
      {[](double t) { return std::sin(t); }, nullptr, nullptr},
  };

  bool ok = true;
  std::string detail;
  for (double a : {0.3, 0.7}) {
    const FractionalOrder alpha(a);
    double prev = std::numeric_limits<double>::infinity();
    double finest = 0.0;
    for (double h : {0.4, 0.2, 0.1, 0.05, 0.025, 0.0125}) {
      const UniformGrid grid(2.0, h);
      double sup = 0.0;
      for (const auto& fn : fns) {
        const auto x = Trajectory::sample_scalar(grid, fn.x);
        // Reference for sin t: fine product-rectangle integral of cos.
        const UniformGrid fine(2.0, h / 64.0);
        const auto cos_fine =
            Trajectory::sample_scalar(fine, [](double t) { return std::cos(t); });
        for (std::size_t k = 1; k < grid.count(); ++k) {
          const double t = grid.node(k);
          double reference;
          if (fn.dx_a3 != nullptr) {
            reference = (a == 0.3 ? fn.dx_a3 : fn.dx_a7)(t);
          } else {
            reference = fracaim::rl_integral(cos_fine, FractionalOrder(1.0 - a),
                                             k * 64)[0];
          }
          const double approx = fracaim::divided_gl_difference(x, alpha, h, k)[0];
          sup = std::max(sup, std::abs(approx - reference));
        }
      }
      ok = ok && sup <= prev + 1e-12;
      prev = sup;
      finest = sup;
    }
    ok = ok && finest <= 0.05;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%sfinest %.4f", detail.empty() ? "" : " ", finest);
    detail += buf;
  }
  report(5, "difference converges to the derivative", ok, detail);
}

// --- 6: analytic solver oracle -----------------------------------------------

void criterion6() {
  const FractionalOrder alpha(0.5);
  Vector x0(1);
  x0[0] = 1.0;
  fracaim::CaputoProblem problem{
      [](double, const Vector& x) { return Vector(-x); }, x0, alpha, 1.0};
  const UniformGrid grid(1.0, 1e-4);
  const auto x = fracaim::solve_caputo(problem, grid);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.count(); ++k) {
    const double exact = fracaim::mittag_leffler(alpha, -std::sqrt(grid.node(k)));
    worst = std::max(worst, std::abs(x[k][0] - exact));
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "max abs error %.2e", worst);
  report(6, "solver matches the series solution", worst <= 0.01, buf);
}

// --- 7: property bundle ------------------------------------------------------

bool weights_property() {
  for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto table = fracaim::gl_weights(FractionalOrder(a), 50);
    long double direct = 1.0L;
    for (int j = 1; j <= 50; ++j) {
      direct *= (static_cast<long double>(j) - 1.0L - static_cast<long double>(a)) /
                static_cast<long double>(j);
      if (std::abs(table[static_cast<std::size_t>(j)] - static_cast<double>(direct)) >
          1e-12 * std::abs(static_cast<double>(direct)))
        return false;
    }
  }
  return true;
}

bool integral_monotonicity_property() {
  const UniformGrid grid(2.0, 0.05);
  for (const auto& fn : {+[](double t) { return t; }, +[](double t) { return t * t; }}) {
    const auto x = Trajectory::sample_scalar(grid, fn);
    for (double a : {0.3, 0.7}) {
      double prev = 0.0;
      for (std::size_t k = 0; k < grid.count(); ++k) {
        const double cur = fracaim::rl_integral(x, FractionalOrder(a), k)[0];
        if (cur < prev) return false;
        prev = cur;
      }
    }
  }
  return true;
}

ConflictDynamics pendulum(std::size_t points) {
  return ConflictDynamics{
      [](double, const Vector& x, const Vector& u, const Vector& v) {
        Vector out(2);
        out[0] = x[1];
        out[1] = -0.5 * std::sin(x[0]) + 0.5 * u[0] + 0.5 * v[0];
        return out;
      },
      ControlGrid::uniform_interval(-1.0, 1.0, points),
      ControlGrid::uniform_interval(-1.0, 1.0, points)};
}

bool saddle_property() {
  const auto d = pendulum(201);
  std::vector<fracaim::SaddleSample> samples;
  for (double t : {0.0, 2.0, 7.5}) {
    Vector x(2), s(2);
    x << std::sin(1.3 * t), 0.5 - 0.1 * t;
    s << 0.4 * t - 1.0, std::cos(t);
    samples.push_back({t, x, s});
  }
  const auto rep = fracaim::saddle_check(d, samples, 0.0);
  return rep.max_gap == 0.0 && rep.flagged.empty();
}

bool determinism_property() {
  const std::string dir = out_dir("fracaim_acc7");
  fracaim::RunConfig config;
  config.scenario = "example2";
  config.euler_step = 0.01;
  config.h_values = {0.1};
  config.deltas = {0.05};
  config.p_grid_points = 41;
  config.q_grid_points = 41;

  config.out_dir = dir + "/a";
  const auto first = fracaim::run_example2(config);
  config.out_dir = dir + "/b";
  const auto second = fracaim::run_example2(config);
  return read_file(first.cases[0].csv_path) == read_file(second.cases[0].csv_path) &&
         !read_file(first.cases[0].csv_path).empty();
}

bool realization_property() {
  const auto d = pendulum(21);
  const UniformGrid grid(2.0, 0.01);
  const auto partition = AimingPartition::uniform(grid, 0.2);
  Vector x0(2);
  x0 << 0.0, 0.5;
  const auto v_exo =
      Trajectory::sample_scalar(grid, [](double t) { return std::sin(3.0 * t); });
  const auto u_exo =
      Trajectory::sample_scalar(grid, [](double t) { return std::cos(2.0 * t); });
  const auto result =
      fracaim::run_aiming(d, FractionalOrder(0.7), x0, grid, 0.1, partition, v_exo, u_exo);

  const auto& idx = partition.node_indices();
  std::size_t node = 0;
  for (std::size_t k = 1; k < grid.count(); ++k) {
    if (node + 1 < idx.size() && idx[node + 1] == k) ++node;
    if (idx[node] != k) {
      if (result.u_real[k] != result.u_real[k - 1]) return false;
      if (result.v_tilde_real[k] != result.v_tilde_real[k - 1]) return false;
    }
  }
  for (std::size_t k = 0; k < grid.count(); ++k) {
    bool u_member = false, vt_member = false;
    for (std::size_t i = 0; i < d.P.size(); ++i)
      u_member = u_member || result.u_real[k] == d.P[i];
    for (std::size_t i = 0; i < d.Q.size(); ++i)
      vt_member = vt_member || result.v_tilde_real[k] == d.Q[i];
    if (!u_member || !vt_member) return false;
  }
  return true;
}

void criterion7() {
  const bool w = weights_property();
  const bool m = integral_monotonicity_property();
  const bool s = saddle_property();
  const bool det = determinism_property();
  const bool real = realization_property();
  std::string detail;
  detail += w ? "" : " weights";
  detail += m ? "" : " monotonicity";
  detail += s ? "" : " saddle";
  detail += det ? "" : " determinism";
  detail += real ? "" : " realizations";
  report(7, "property bundle", w && m && s && det && real,
         detail.empty() ? "" : "failing:" + detail);
}

// --- 8: substitution statement -----------------------------------------------

void criterion8() {
  // The underlying convergence guarantees assert, for every tolerance, the
  // existence of sufficiently fine h and delta. That existential form is not
  // directly checkable; it is deliberately covered by the monotone refinement
  // checks in criteria 1, 2 and 5, which verify that the observed error
  // shrinks as h (and delta) are refined.
  report(8, "refinement checks substitute for limit claims", true,
         "covered by criteria 1, 2, 5");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  return g_all_ok ? 0 : 1;
}
