#include "pdae/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>

#include "pdae/constraint.hpp"

namespace pdae::nonlinearity {

void CoefficientSet::validate() const {
  if (!(d_u > 0.0) || !(d_v > 0.0) || !std::isfinite(d_u) || !std::isfinite(d_v)) {
    throw std::invalid_argument("CoefficientSet: diffusion coefficients must be finite and > 0");
  }
  if (!std::isfinite(p_u) || !std::isfinite(p_v)) {
    throw std::invalid_argument("CoefficientSet: impact coefficients must be finite");
  }
}

namespace {

// The nonlocal reaction part of F, without sources.
StateU reaction(const StateU& U, const CoefficientSet& C) {
  StateU out(U.grid_ptr());
  if (!C.reaction_enabled) return out;
  Field weighted(U.grid_ptr());
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    weighted[i] = C.p_u * U.u[i] + C.p_v * U.v[i];
  }
  const Field I = constraint::cumulative_integral(weighted);
  for (std::size_t i = 0; i < I.size(); ++i) {
    out.u[i] = -U.u[i] * I[i];
    out.v[i] = U.v[i] * I[i];
  }
  return out;
}

}  // namespace

StateU eval_F(const StateU& U, double t, const SourcePair& S, const CoefficientSet& C) {
  StateU out = reaction(U, C);
  if (S.kind() != SourceKind::zero) {
    out.u += S.f(t);
    out.v += S.g(t);
  }
  return out;
}

double lipschitz_ratio(const StateU& U, const StateU& V, const SourcePair& S, double t,
                       const CoefficientSet& C) {
  const double denom = norm(U - V);
  if (!(denom > 0.0)) {
    throw std::domain_error("lipschitz_ratio: U and V coincide");
  }
  return norm(eval_F(U, t, S, C) - eval_F(V, t, S, C)) / denom;
}

double h1_seminorm(const Field& f) {
  const std::size_t n = f.size();
  const double h = f.grid().h();
  double sum = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double d = f.at_node(j + 1) - f.at_node(j);
    sum += d * d;
  }
  return std::sqrt(sum / h);
}

}  // namespace pdae::nonlinearity
