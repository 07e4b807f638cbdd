#include "pdae/constraint.hpp"

#include <cmath>

namespace pdae::constraint {

Field cumulative_integral(const Field& f) {
  const std::size_t n = f.size();
  const double half_h = 0.5 * f.grid().h();
  Field out(f.grid_ptr());
  double acc = 0.0;
  double prev = f.left();
  for (std::size_t i = 0; i < n; ++i) {
    acc += half_h * (prev + f[i]);
    out[i] = acc;
    prev = f[i];
  }
  acc += half_h * (prev + f.right());
  out.set_boundary(0.0, acc);
  return out;
}

namespace {

Field weighted_sum(const StateU& U, double p_u, double p_v) {
  Field s(U.grid_ptr());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = p_u * U.u[i] + p_v * U.v[i];
  s.set_boundary(p_u * U.u.left() + p_v * U.v.left(), p_u * U.u.right() + p_v * U.v.right());
  return s;
}

}  // namespace

Field compute_wx(const StateU& U, double p_u, double p_v) {
  Field wx = cumulative_integral(weighted_sum(U, p_u, p_v));
  for (double& x : wx.values()) x = -x;
  wx.set_boundary(0.0, -wx.right());
  return wx;
}

Field reconstruct_w(const StateU& U, double p_u, double p_v) {
  return cumulative_integral(compute_wx(U, p_u, p_v));
}

ConstraintReport constraint_residual(const StateU& U, const Field& w, double p_u,
                                     double p_v) {
  require_same_grid(U.u, w, "constraint_residual");
  const std::size_t n = w.size();
  const double h = w.grid().h();
  const double inv_h2 = 1.0 / (h * h);

  ConstraintReport report;
  double sum = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double wxx = (w.at_node(j - 1) - 2.0 * w.at_node(j) + w.at_node(j + 1)) * inv_h2;
    const double r = wxx + p_u * U.u[j - 1] + p_v * U.v[j - 1];
    sum += r * r;
  }
  report.residual_l2 = std::sqrt(h * sum);
  report.w_at_0 = w.left();
  report.wx_at_0 = compute_wx(U, p_u, p_v).left();
  report.wx_at_0_forward_difference = (w.at_node(1) - w.left()) / h;
  report.w_at_1 = w.right();
  return report;
}

}  // namespace pdae::constraint
