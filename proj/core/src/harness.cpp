#include "fracaim/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace fracaim {

double Waveform::operator()(double t) const {
  switch (shape) {
    case Shape::kConstant:
      return offset;
    case Shape::kSine:
      return amplitude * std::sin(frequency * t) + offset;
    case Shape::kCosine:
      return amplitude * std::cos(frequency * t) + offset;
  }
  throw std::logic_error("unreachable waveform shape");
}

namespace {

std::vector<Scenario> build_registry() {
  std::vector<Scenario> registry;

  {
    Scenario s;
    s.name = "example1";
    s.kind = ScenarioKind::kPlain;
    s.alpha = 0.3;
    s.horizon = 5.0;
    s.x0 = Vector(2);
    s.x0 << 0.5, -1.0;
    s.plain = [](double t, const Vector& x) {
      Vector out(2);
      out[0] = x[0] - x[1] + std::cos(2.0 * t);
      out[1] = t * x[0] + std::exp(std::cos(x[1])) + std::sin(2.0 * t);
      return out;
    };
    s.default_h = {0.1, 0.01, 0.001};
    registry.push_back(std::move(s));
  }

  {
    Scenario s;
    s.name = "example2";
    s.kind = ScenarioKind::kConflict;
    s.alpha = 0.7;
    s.horizon = 10.0;
    s.x0 = Vector(2);
    s.x0 << 0.0, 0.5;
    s.conflict = [](double, const Vector& x, const Vector& u, const Vector& v) {
      Vector out(2);
      out[0] = x[1];
      out[1] = -0.5 * std::sin(x[0]) + 0.5 * u[0] + 0.5 * v[0];
      return out;
    };
    s.control_lo = -1.0;
    s.control_hi = 1.0;
    s.default_v = {Waveform::Shape::kSine, 1.0, 3.0, 0.0};
    s.default_u_tilde = {Waveform::Shape::kCosine, 1.0, 2.0, 0.0};
    s.default_h = {0.1, 0.01};
    s.default_delta = {0.02, 0.005};
    registry.push_back(std::move(s));
  }

  return registry;
}

const std::vector<Scenario>& registry() {
  static const std::vector<Scenario> scenarios = build_registry();
  return scenarios;
}

struct ResolvedRuns {
  const Scenario* scenario;
  FractionalOrder alpha;
  UniformGrid grid;
  std::vector<double> h_values;
  std::vector<double> deltas;
  Waveform v_wave;
  Waveform u_tilde_wave;
};

ResolvedRuns resolve(const RunConfig& config, ScenarioKind expected_kind) {
  validate_config(config);
  const Scenario& sc = find_scenario(config.scenario);
  if (sc.kind != expected_kind)
    throw std::invalid_argument("scenario '" + sc.name + "' has the wrong kind for this run");

  const double alpha = config.alpha_override.value_or(sc.alpha);
  UniformGrid grid(sc.horizon, config.euler_step);

  std::vector<double> hs = config.h_values.empty() ? sc.default_h : config.h_values;
  std::vector<double> deltas = config.deltas.empty() ? sc.default_delta : config.deltas;
  if (expected_kind == ScenarioKind::kConflict) {
    if (deltas.size() == 1 && hs.size() > 1) deltas.assign(hs.size(), deltas.front());
    if (deltas.size() != hs.size())
      throw std::invalid_argument("number of delta values must match the h list (or be 1)");
  }
  for (double h : hs)
    if (!grid.commensurate(h))
      throw std::invalid_argument("h is not an integer multiple of euler_step");
  for (double delta : deltas)
    if (!grid.commensurate(delta))
      throw std::invalid_argument("delta is not an integer multiple of euler_step");

  return ResolvedRuns{&sc,
                      FractionalOrder(alpha),
                      grid,
                      std::move(hs),
                      std::move(deltas),
                      config.v_wave.value_or(sc.default_v),
                      config.u_tilde_wave.value_or(sc.default_u_tilde)};
}

std::string run_path(const std::string& out_dir, const std::string& name) {
  namespace fs = std::filesystem;
  const std::string dir = out_dir.empty() ? "." : out_dir;
  fs::create_directories(dir);
  return (fs::path(dir) / name).string();
}

std::string format_h(double h) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", h);
  std::string s(buf);
  for (char& c : s)
    if (c == '.') c = 'p';
  return s;
}

}  // namespace

const Scenario& find_scenario(const std::string& name) {
  for (const Scenario& s : registry())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const Scenario& s : registry()) names.push_back(s.name);
  return names;
}

ApproxReport run_example1(const RunConfig& config) {
  const ResolvedRuns runs = resolve(config, ScenarioKind::kPlain);
  const Scenario& sc = *runs.scenario;

  CaputoProblem problem{sc.plain, sc.x0, runs.alpha, sc.horizon};
  const Trajectory reference = solve_caputo(problem, runs.grid);

  ApproxReport report;
  std::string summary;
  summary += "h,delta,sup_error\n";
  for (double h : runs.h_values) {
    RetardedProblem retarded{problem, h};
    const Trajectory y = solve_retarded(retarded, runs.grid);
    const Trajectory xt = reconstruct(retarded, y);
    const double err = sup_error(reference, xt);

    const std::string path =
        run_path(config.out_dir, sc.name + "_h" + format_h(h) + ".csv");
    emit_csv(reference, xt, path);
    report.cases.push_back({h, err, path});

    char row[128];
    std::snprintf(row, sizeof row, "%.12g,,%.12g\n", h, err);
    summary += row;
  }

  report.summary_path = run_path(config.out_dir, sc.name + "_summary.csv");
  write_text_file(report.summary_path, summary);
  return report;
}

AimingReport run_example2(const RunConfig& config) {
  const ResolvedRuns runs = resolve(config, ScenarioKind::kConflict);
  const Scenario& sc = *runs.scenario;

  const ControlGrid P =
      ControlGrid::uniform_interval(sc.control_lo, sc.control_hi, config.p_grid_points);
  const ControlGrid Q =
      ControlGrid::uniform_interval(sc.control_lo, sc.control_hi, config.q_grid_points);
  const ConflictDynamics dynamics{sc.conflict, P, Q};

  const Realization v_exo = Trajectory::sample_scalar(
      runs.grid, [&](double t) { return runs.v_wave(t); });
  const Realization u_tilde_exo = Trajectory::sample_scalar(
      runs.grid, [&](double t) { return runs.u_tilde_wave(t); });

  AimingReport report;
  std::string summary;
  summary += "h,delta,sup_error\n";
  for (std::size_t i = 0; i < runs.h_values.size(); ++i) {
    const double h = runs.h_values[i];
    const double delta = runs.deltas[i];
    const AimingPartition partition = AimingPartition::uniform(runs.grid, delta);
    const AimingResult result = run_aiming(dynamics, runs.alpha, sc.x0, runs.grid, h,
                                           partition, v_exo, u_tilde_exo);

    const std::string path = run_path(
        config.out_dir, sc.name + "_h" + format_h(h) + "_d" + format_h(delta) + ".csv");
    emit_csv(result.x, result.x_tilde, path);
    report.cases.push_back({h, delta, result.sup_error, path});

    char row[160];
    std::snprintf(row, sizeof row, "%.12g,%.12g,%.12g\n", h, delta, result.sup_error);
    summary += row;
  }

  report.summary_path = run_path(config.out_dir, sc.name + "_summary.csv");
  write_text_file(report.summary_path, summary);
  return report;
}

}  // namespace fracaim
