#pragma once

#include <functional>
#include <string>

#include "pdae/field.hpp"
#include "pdae/spectral.hpp"

namespace pdae::nonlinearity {

struct CoefficientSet {
  double d_u = 1.0;
  double d_v = 1.0;
  double p_u = 1.0;
  double p_v = 1.0;
  /// Test hook: when false the nonlocal reaction term is dropped and F
  /// reduces to the sources.
  bool reaction_enabled = true;

  spectral::Diffusion diffusion() const noexcept { return {d_u, d_v}; }
  /// Throws std::invalid_argument unless d_u > 0, d_v > 0 and all finite.
  void validate() const;
};

enum class SourceKind { zero, mms, custom_tabulated };

std::string to_string(SourceKind kind);

/// Time-dependent source terms (f, g). Generators must be re-entrant.
class SourcePair {
 public:
  using Generator = std::function<Field(double t)>;

  SourcePair(GridPtr grid, SourceKind kind, Generator f, Generator g);

  static SourcePair zero(GridPtr grid);

  SourceKind kind() const noexcept { return kind_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }

  Field f(double t) const;
  Field g(double t) const;

 private:
  GridPtr grid_;
  SourceKind kind_;
  Generator f_;
  Generator g_;
};

/// Loads tabulated sources from CSV with columns t,x,f,g. Every time slice
/// must list every interior node of `grid` (boundary rows x = 0, 1 are
/// accepted and ignored); values are interpolated linearly in t and held
/// constant outside the tabulated range. Errors carry the path.
SourcePair load_tabulated_sources(const std::string& path, GridPtr grid);

/// F(U, t) = (-u*I + f(t), v*I + g(t)) with I = int_0^x (p_u u + p_v v).
StateU eval_F(const StateU& U, double t, const SourcePair& S,
              const CoefficientSet& C = {});

/// ||F(U) - F(V)|| / ||U - V||; the sources cancel. Throws std::domain_error
/// when ||U - V|| = 0.
double lipschitz_ratio(const StateU& U, const StateU& V, const SourcePair& S,
                       double t = 0.0, const CoefficientSet& C = {});

/// sqrt(h * sum_{j=0..n} ((f_{j+1} - f_j)/h)^2), boundary values included.
double h1_seminorm(const Field& f);

}  // namespace pdae::nonlinearity
