#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fracaim/frac_ops.hpp"
#include "fracaim/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config_path;
  std::string scenario;
  double euler_step = 0.0;
  double alpha_override = 0.0;
  std::vector<double> h_values;
  std::vector<double> deltas;
  std::size_t p_grid_points = 0;
  std::size_t q_grid_points = 0;
  std::string v_shape, u_tilde_shape;
  double v_amplitude = 0.0, v_frequency = 0.0, v_offset = 0.0;
  double u_tilde_amplitude = 0.0, u_tilde_frequency = 0.0, u_tilde_offset = 0.0;
  std::string out_dir;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool conflict_opts) {
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--config", flags.config_path, "Config file path");
  cmd->add_option("--scenario", flags.scenario, "Scenario name");
  cmd->add_option("--euler-step", flags.euler_step, "Euler grid step");
  cmd->add_option("--alpha-override", flags.alpha_override, "Override the scenario order");
  cmd->add_option("--h", flags.h_values, "Delay quantum (repeatable)");
  cmd->add_option("--out-dir", flags.out_dir, "Output directory");
  if (conflict_opts) {
    cmd->add_option("--delta", flags.deltas, "Partition step (repeatable, zipped with --h)");
    cmd->add_option("--p-grid-points", flags.p_grid_points, "Control grid size for P");
    cmd->add_option("--q-grid-points", flags.q_grid_points, "Control grid size for Q");
    cmd->add_option("--v-shape", flags.v_shape, "Disturbance waveform: constant|sine|cosine");
    cmd->add_option("--v-amplitude", flags.v_amplitude, "Disturbance amplitude");
    cmd->add_option("--v-frequency", flags.v_frequency, "Disturbance frequency");
    cmd->add_option("--v-offset", flags.v_offset, "Disturbance offset");
    cmd->add_option("--u-tilde-shape", flags.u_tilde_shape,
                    "Approximating-side control waveform");
    cmd->add_option("--u-tilde-amplitude", flags.u_tilde_amplitude, "Control amplitude");
    cmd->add_option("--u-tilde-frequency", flags.u_tilde_frequency, "Control frequency");
    cmd->add_option("--u-tilde-offset", flags.u_tilde_offset, "Control offset");
  }
}

fracaim::Waveform::Shape shape_from(const std::string& name) {
  if (name == "constant") return fracaim::Waveform::Shape::kConstant;
  if (name == "sine") return fracaim::Waveform::Shape::kSine;
  if (name == "cosine") return fracaim::Waveform::Shape::kCosine;
  throw std::invalid_argument("unknown waveform shape '" + name + "'");
}

// Precedence: flags > config file > defaults; FRACAIM_OUT_DIR fills out_dir last.
fracaim::RunConfig build_config(const CLI::App* cmd, const CommonFlags& flags) {
  fracaim::RunConfig config;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw fracaim::IoError("cannot open config: " + flags.config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    config = fracaim::parse_config(buffer.str());
  }

  const auto set = [cmd](const std::string& name) { return cmd->count(name) > 0; };
  if (set("--scenario")) config.scenario = flags.scenario;
  if (set("--euler-step")) config.euler_step = flags.euler_step;
  if (set("--alpha-override")) config.alpha_override = flags.alpha_override;
  if (set("--h")) config.h_values = flags.h_values;
  if (set("--out-dir")) config.out_dir = flags.out_dir;
  if (cmd->get_option_no_throw("--delta") != nullptr) {
    if (set("--delta")) config.deltas = flags.deltas;
    if (set("--p-grid-points")) config.p_grid_points = flags.p_grid_points;
    if (set("--q-grid-points")) config.q_grid_points = flags.q_grid_points;
    auto wave = [&](std::optional<fracaim::Waveform>& slot) -> fracaim::Waveform& {
      if (!slot) slot = fracaim::Waveform{fracaim::Waveform::Shape::kConstant, 1.0, 1.0, 0.0};
      return *slot;
    };
    if (set("--v-shape")) wave(config.v_wave).shape = shape_from(flags.v_shape);
    if (set("--v-amplitude")) wave(config.v_wave).amplitude = flags.v_amplitude;
    if (set("--v-frequency")) wave(config.v_wave).frequency = flags.v_frequency;
    if (set("--v-offset")) wave(config.v_wave).offset = flags.v_offset;
    if (set("--u-tilde-shape")) wave(config.u_tilde_wave).shape = shape_from(flags.u_tilde_shape);
    if (set("--u-tilde-amplitude")) wave(config.u_tilde_wave).amplitude = flags.u_tilde_amplitude;
    if (set("--u-tilde-frequency")) wave(config.u_tilde_wave).frequency = flags.u_tilde_frequency;
    if (set("--u-tilde-offset")) wave(config.u_tilde_wave).offset = flags.u_tilde_offset;
  }

  if (config.out_dir.empty())
    if (const char* env = std::getenv("FRACAIM_OUT_DIR")) config.out_dir = env;

  fracaim::validate_config(config);
  return config;
}

int cmd_solve(const CLI::App* cmd, const CommonFlags& flags) {
  const auto config = build_config(cmd, flags);
  const auto& sc = fracaim::find_scenario(config.scenario);
  if (sc.kind != fracaim::ScenarioKind::kPlain)
    throw std::invalid_argument("solve requires a plain scenario");
  const double alpha = config.alpha_override.value_or(sc.alpha);
  fracaim::CaputoProblem problem{sc.plain, sc.x0, fracaim::FractionalOrder(alpha),
                                 sc.horizon};
  fracaim::UniformGrid grid(sc.horizon, config.euler_step);
  const auto x = fracaim::solve_caputo(problem, grid);
  const std::string dir = config.out_dir.empty() ? "." : config.out_dir;
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/" + sc.name + "_solution.csv";
  fracaim::emit_trajectory_csv(x, path);
  std::cout << "scenario " << sc.name << ": " << grid.count() << " nodes -> " << path
            << "\n";
  return kExitOk;
}

int cmd_approx(const CLI::App* cmd, const CommonFlags& flags) {
  const auto report = fracaim::run_example1(build_config(cmd, flags));
  std::printf("h,sup_error\n");
  for (const auto& c : report.cases) std::printf("%g,%.6g\n", c.h, c.sup_error);
  std::printf("summary: %s\n", report.summary_path.c_str());
  return kExitOk;
}

int cmd_aiming(const CLI::App* cmd, const CommonFlags& flags) {
  const auto report = fracaim::run_example2(build_config(cmd, flags));
  std::printf("h,delta,sup_error\n");
  for (const auto& c : report.cases)
    std::printf("%g,%g,%.6g\n", c.h, c.delta, c.sup_error);
  std::printf("summary: %s\n", report.summary_path.c_str());
  return kExitOk;
}

bool report_check(const char* name, bool ok) {
  std::printf("%-40s %s\n", name, ok ? "pass" : "FAIL");
  return ok;
}

int cmd_selftest() {
  using fracaim::FractionalOrder;
  using fracaim::Trajectory;
  using fracaim::UniformGrid;
  using fracaim::Vector;
  bool all_ok = true;

  {
    // Recurrence weights against the direct product form of C(alpha, j).
    bool ok = true;
    for (double alpha = 0.1; alpha < 0.95; alpha += 0.1) {
      const auto table = fracaim::gl_weights(FractionalOrder(alpha), 50);
      long double direct = 1.0L;
      for (int j = 1; j <= 50; ++j) {
        direct *= (static_cast<long double>(j) - 1.0L - static_cast<long double>(alpha)) /
                  static_cast<long double>(j);
        ok = ok && std::abs(table[static_cast<std::size_t>(j)] -
                            static_cast<double>(direct)) <=
                       1e-12 * std::abs(static_cast<double>(direct));
      }
    }
    all_ok &= report_check("weights: recurrence vs product", ok);
  }

  {
    // Kernel identity for x(t) = t, alpha = 0.5, h = 0.5 on [0, 2].
    const FractionalOrder alpha(0.5);
    const UniformGrid grid(2.0, 0.5);
    const auto x = Trajectory::sample_scalar(grid, [](double t) { return t; });
    const auto phi = [&](double t) {
      Vector v(1);
      v[0] = t <= 0.0 ? 0.0 : std::pow(t, 0.5) / std::tgamma(1.5);
      return v;
    };
    bool ok = true;
    for (std::size_t k = 1; k < grid.count(); ++k) {
      const auto lhs = fracaim::divided_gl_difference(x, alpha, 0.5, k);
      const auto rhs = fracaim::p_alpha_convolution(alpha, phi, grid.node(k), 0.5, 1e-3);
      ok = ok && (lhs - rhs).norm() < 1e-3;
    }
    all_ok &= report_check("kernel identity (divided GL vs p_a)", ok);
  }

  {
    const auto integral =
        fracaim::p_alpha_partial_integral(FractionalOrder(0.5), 64.0, 0.01);
    all_ok &= report_check("p_a normalization (integral -> 1)",
                           std::abs(integral.signed_integral - 1.0) < 0.05);
  }

  {
    // Linear test equation against the Mittag-Leffler series.
    const FractionalOrder alpha(0.5);
    Vector x0(1);
    x0[0] = 1.0;
    fracaim::CaputoProblem problem{
        [](double, const Vector& x) { return Vector(-x); }, x0, alpha, 1.0};
    const UniformGrid grid(1.0, 1e-4);
    const auto x = fracaim::solve_caputo(problem, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.count(); k += 100) {
      const double exact =
          fracaim::mittag_leffler(alpha, -std::sqrt(grid.node(k)));
      worst = std::max(worst, std::abs(x[k][0] - exact));
    }
    all_ok &= report_check("solver vs Mittag-Leffler oracle", worst <= 0.01);
  }

  return all_ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional-order system approximation and mutual aiming simulator"};
  app.require_subcommand(1);

  CommonFlags solve_flags, approx_flags, aiming_flags;
  auto* solve = app.add_subcommand("solve", "Solve the fractional Cauchy problem");
  add_common_flags(solve, solve_flags, false);
  auto* approx = app.add_subcommand("approx", "Compare a plain scenario to its delay approximation");
  add_common_flags(approx, approx_flags, false);
  auto* aiming = app.add_subcommand("aiming", "Run the mutual aiming experiment");
  add_common_flags(aiming, aiming_flags, true);
  app.add_subcommand("selftest", "Run the operator property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve, solve_flags);
    if (approx->parsed()) return cmd_approx(approx, approx_flags);
    if (aiming->parsed()) return cmd_aiming(aiming, aiming_flags);
    return cmd_selftest();
  } catch (const fracaim::DivergedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const fracaim::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
