#pragma once

#include <functional>

#include "fracaim/errors.hpp"
#include "fracaim/fractional_order.hpp"
#include "fracaim/grid.hpp"

namespace fracaim {

using PlainDynamics = std::function<Vector(double t, const Vector& x)>;

struct CaputoProblem {
  PlainDynamics dynamics;
  Vector x0;
  FractionalOrder alpha;
  double horizon;
  // Runtime guard: abort if ||f(t,x)|| exceeds (1 + ||x||) * growth_guard.
  double growth_guard = 1e6;
};

struct RetardedProblem {
  CaputoProblem base;
  double delay;  // delay quantum h; must be a multiple of the solver grid step
};

/// Explicit product-rectangle fractional Euler:
/// x_{k+1} = x0 + sum_{j<=k} b_{k-j} f(t_j, x_j),
/// b_m = step^alpha [(m+1)^alpha - m^alpha] / Gamma(alpha+1).
Trajectory solve_caputo(const CaputoProblem& problem, const UniformGrid& grid);

/// Classical explicit Euler on the retarded equation
/// y' = f(t, x0 + h^{alpha-1} (Delta_h^{1-alpha} y)(t)), y(0) = 0.
/// The lag sum at step k touches only y_0..y_k.
Trajectory solve_retarded(const RetardedProblem& problem, const UniformGrid& grid);

/// Pointwise reconstruction x~(t_k) = x0 + h^{alpha-1} (Delta_h^{1-alpha} y)(t_k).
Trajectory reconstruct(const RetardedProblem& problem, const Trajectory& y);

/// max over grid nodes of the Euclidean distance between two trajectories.
double sup_error(const Trajectory& a, const Trajectory& b);

}  // namespace fracaim
