#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracaim/conflict_sim.hpp"
#include "fracaim/fde_solver.hpp"

namespace fracaim {

struct Waveform {
  enum class Shape { kConstant, kSine, kCosine };
  Shape shape = Shape::kConstant;
  double amplitude = 0.0;
  double frequency = 0.0;
  double offset = 0.0;

  double operator()(double t) const;
};

enum class ScenarioKind { kPlain, kConflict };

/// Hard-coded dynamics selected by name; the config parameterizes them.
struct Scenario {
  std::string name;
  ScenarioKind kind;
  double alpha;
  double horizon;
  Vector x0;
  PlainDynamics plain;                   // kPlain
  ConflictField conflict;                // kConflict
  double control_lo = 0.0, control_hi = 0.0;  // scalar P = Q bounds (kConflict)
  Waveform default_v;
  Waveform default_u_tilde;
  std::vector<double> default_h;
  std::vector<double> default_delta;
};

const Scenario& find_scenario(const std::string& name);
std::vector<std::string> scenario_names();

struct RunConfig {
  std::string scenario;
  std::optional<double> alpha_override;
  double euler_step = 1e-3;
  std::vector<double> h_values;   // empty -> scenario defaults
  std::vector<double> deltas;     // conflict kind; zipped with h_values
  std::size_t p_grid_points = 201;
  std::size_t q_grid_points = 201;
  std::optional<Waveform> v_wave;
  std::optional<Waveform> u_tilde_wave;
  std::string out_dir;  // empty means current directory
};

/// Parse the key = value config document. Unknown keys and incommensurate
/// steps are rejected before any computation; errors carry line numbers.
RunConfig parse_config(const std::string& text);

/// Validate cross-field constraints (commensurability, scenario existence).
void validate_config(const RunConfig& config);

struct ApproxCase {
  double h;
  double sup_error;
  std::string csv_path;
};

struct ApproxReport {
  std::vector<ApproxCase> cases;
  std::string summary_path;
};

/// Reference fractional solve plus retarded approximation per h, with CSV
/// emission; plain scenarios only.
ApproxReport run_example1(const RunConfig& config);

struct AimingCase {
  double h;
  double delta;
  double sup_error;
  std::string csv_path;
};

struct AimingReport {
  std::vector<AimingCase> cases;
  std::string summary_path;
};

/// Mutual aiming experiment per (h, delta) pair; conflict scenarios only.
AimingReport run_example2(const RunConfig& config);

/// Rows `t,x_1..x_n,xt_1..xt_n`, one per grid node, 12 significant digits.
void emit_csv(const Trajectory& x, const Trajectory& x_tilde, const std::string& path);

/// Single-trajectory variant, rows `t,x_1..x_n` (used by the solve command).
void emit_trajectory_csv(const Trajectory& x, const std::string& path);

/// Parse a trajectory pair back from an emitted CSV (round-trip checks and
/// summary recomputation).
std::pair<Trajectory, Trajectory> read_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fracaim
