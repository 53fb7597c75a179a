#pragma once

#include "fracaim/fractional_order.hpp"
#include "fracaim/gl_weights.hpp"
#include "fracaim/grid.hpp"

namespace fracaim {

/// (Delta_h^alpha x)(t_k) = sum_{j=0}^{[t/h]} w_j x(t - jh).
/// h must be an exact integer multiple of the grid step; past states are
/// never interpolated.
Vector gl_difference(const Trajectory& x, FractionalOrder alpha, double h,
                     std::size_t t_index);

/// h^{-alpha} (Delta_h^alpha x)(t_k).
Vector divided_gl_difference(const Trajectory& x, FractionalOrder alpha, double h,
                             std::size_t t_index);

/// Kernel p_alpha(tau) = (1/Gamma(alpha)) sum_{0 <= j < tau} w_j (tau-j)^{alpha-1}.
/// On (0,1] this is the single term tau^{alpha-1}/Gamma(alpha).
double p_alpha_kernel(FractionalOrder alpha, double tau);

struct PartialIntegral {
  double signed_integral;
  double abs_integral;
};

/// Composite midpoint quadrature of p_alpha and |p_alpha| over (0, upper].
/// Each unit segment [j, j+1) is split dyadically toward its left endpoint to
/// resolve the (tau - j)^{alpha-1} singularity; the deepest sliver is handled
/// by the closed-form antiderivative of the singular term.
PartialIntegral p_alpha_partial_integral(FractionalOrder alpha, double upper,
                                         double quad_step);

/// Quadrature of the convolution integral from the kernel identity,
/// int_0^{t/h} phi(t - tau h) p_alpha(tau) dtau, using the same
/// singularity-aware midpoint scheme as p_alpha_partial_integral. This is
/// the second route of the identity whose first route is
/// divided_gl_difference; the two must agree for phi the fractional
/// derivative of x.
Vector p_alpha_convolution(FractionalOrder alpha,
                           const std::function<Vector(double)>& phi, double t, double h,
                           double quad_step);

/// Product-rectangle quadrature of the order-alpha fractional integral:
/// sum_{k<m} phi(t_k) [(t-t_k)^alpha - (t-t_{k+1})^alpha] / Gamma(alpha+1).
/// The weakly singular kernel is integrated exactly over each cell.
Vector rl_integral(const Trajectory& phi, FractionalOrder alpha, std::size_t t_index);

/// Caputo derivative of a Lipschitz trajectory: fractional integral of order
/// 1-alpha applied to the forward-difference derivative of x - x(0).
Vector caputo_derivative_of_lipschitz(const Trajectory& x, FractionalOrder alpha,
                                      std::size_t t_index);

/// Mittag-Leffler series sum_{k>=0} z^k / Gamma(alpha k + 1). Real argument,
/// desk scale; used as an analytic oracle, not a runtime dependency.
double mittag_leffler(FractionalOrder alpha, double z);

/// Raw-order variant for testing only (admits alpha = 1, where the series
/// equals e^z).
double mittag_leffler_raw(double alpha, double z);

}  // namespace fracaim
