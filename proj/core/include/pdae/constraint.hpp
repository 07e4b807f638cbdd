#pragma once

#include "pdae/field.hpp"

// Index reduction of the elliptic constraint w_xx = -(p_u u + p_v v):
// w_x = -int_0^x (p_u u + p_v v) and w = int_0^x w_x, both by composite
// trapezoid, so that w(0) = w_x(0) = 0 hold by construction.
namespace pdae::constraint {

struct ConstraintReport {
  /// Discrete L2 norm of w_xx + p_u u + p_v v over interior nodes.
  double residual_l2 = 0.0;
  double w_at_0 = 0.0;
  /// w_x(0) from the index-reduced formula; zero by construction.
  double wx_at_0 = 0.0;
  /// Forward difference (w_1 - w_0)/h, an O(h^2) diagnostic of the same
  /// boundary condition read off w alone.
  double wx_at_0_forward_difference = 0.0;
  /// Not enforced: w(1) = 0 needs int_0^1 int_0^y (p_u u + p_v v) = 0.
  double w_at_1 = 0.0;
};

/// Composite trapezoid int_0^{x_j} f for every node j = 0..n+1, using the
/// field's boundary pair (zeros for a Dirichlet field). The result carries
/// boundary values (0, int_0^1 f).
Field cumulative_integral(const Field& f);

/// w_x = -cumulative_integral(p_u u + p_v v).
Field compute_wx(const StateU& U, double p_u = 1.0, double p_v = 1.0);

/// w = cumulative_integral(compute_wx(U)).
Field reconstruct_w(const StateU& U, double p_u = 1.0, double p_v = 1.0);

/// Throws GridMismatch when w and U live on different grids.
ConstraintReport constraint_residual(const StateU& U, const Field& w,
                                     double p_u = 1.0, double p_v = 1.0);

}  // namespace pdae::constraint
