#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fracaim/errors.hpp"
#include "fracaim/fractional_order.hpp"
#include "fracaim/grid.hpp"

namespace fracaim {

/// Finite discretization of a compact control set. Iteration order is fixed
/// at construction; ties in extremal selection resolve to the lowest index.
class ControlGrid {
 public:
  explicit ControlGrid(std::vector<Vector> points);

  /// count equally spaced scalar points on [lo, hi].
  static ControlGrid uniform_interval(double lo, double hi, std::size_t count);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vector>& points() const { return points_; }

  const Vector& lower_bound() const { return lo_; }
  const Vector& upper_bound() const { return hi_; }
  Vector clamp(const Vector& v) const;

 private:
  std::vector<Vector> points_;
  std::size_t dim_;
  Vector lo_, hi_;
};

using ConflictField =
    std::function<Vector(double t, const Vector& x, const Vector& u, const Vector& v)>;

struct ConflictDynamics {
  ConflictField g;
  ControlGrid P;
  ControlGrid Q;
  double growth_guard = 1e6;  // ||g|| <= (1 + ||x||) * growth_guard
};

/// Partition 0 = tau_1 < ... < tau_{k+1} = T; every node must sit on the
/// Euler grid exactly.
class AimingPartition {
 public:
  AimingPartition(std::vector<double> nodes, const UniformGrid& grid);
  static AimingPartition uniform(const UniformGrid& grid, double delta);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<std::size_t>& node_indices() const { return indices_; }
  double diameter() const;

 private:
  std::vector<double> nodes_;
  std::vector<std::size_t> indices_;
};

/// Control signal sampled on the Euler grid.
using Realization = Trajectory;

struct AimingResult {
  Trajectory x;        // fractional motion
  Trajectory y;        // retarded motion
  Trajectory x_tilde;  // reconstruction of x from y
  Realization u_real;
  Realization v_real;
  Realization u_tilde_real;
  Realization v_tilde_real;
  double sup_error;
};

/// H(t,x,s) = min over P of max over Q of <s, g(t,x,u,v)>.
double hamiltonian(const ConflictDynamics& d, double t, const Vector& x, const Vector& s);

/// P-grid point achieving the outer min of max_v <s, g>; lowest index on ties.
Vector extremal_u(const ConflictDynamics& d, double t, const Vector& x, const Vector& s);

/// Q-grid point achieving the outer max of min_u <s, g>; lowest index on ties.
Vector extremal_v(const ConflictDynamics& d, double t, const Vector& x_tilde,
                  const Vector& s);

struct SaddleSample {
  double t;
  Vector x;
  Vector s;
};

struct SaddleReport {
  std::vector<double> gaps;  // minmax - maxmin per sample, >= 0 on grids
  double max_gap;
  std::vector<std::size_t> flagged;  // samples exceeding the tolerance
};

SaddleReport saddle_check(const ConflictDynamics& d, std::span<const SaddleSample> samples,
                          double tolerance = 1e-12);

/// Mutual aiming co-simulation. The fractional motion advances by explicit
/// fractional Euler under g(t, x, u, v_exo); the retarded motion by classical
/// Euler under g(t, x~, u_tilde_exo, v~). At each partition node the aiming
/// direction s~ = x - x~ refreshes u (extremal min-max at the fractional
/// state) and v~ (extremal max-min at the reconstructed state); both are held
/// constant until the next node.
AimingResult run_aiming(const ConflictDynamics& d, FractionalOrder alpha, const Vector& x0,
                        const UniformGrid& grid, double h, const AimingPartition& partition,
                        const Realization& v_exo, const Realization& u_tilde_exo);

}  // namespace fracaim
