#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pdae/field.hpp"

// Finite-difference analogues of the operator statements behind the
// existence theory: A_h dissipative, I - A_h onto, exp(t A_h) a contraction
// semigroup, and the reaction term locally Lipschitz with constant 4*sqrt(3)*C.
// All tests act on H = L2 x L2 with the discrete trapezoid norm. The
// alternative space with vanishing boundary derivatives that appears in the
// regularity argument is not used here.
namespace pdae::verification {

/// One measured quantity with its acceptance threshold.
struct SubCheck {
  std::string name;
  double worst_value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Outcome of one property check. The headline fields summarize the
/// sub-checks as a margin: worst_value = max_i (worst_i - tolerance_i) and
/// tolerance = 0, so passed <=> worst_value <= tolerance <=> every sub-check
/// passed.
struct PropertyReport {
  std::string name;
  std::size_t n_interior = 0;
  std::size_t samples = 0;
  double worst_value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::uint64_t seed = 0;
  std::vector<SubCheck> checks;

  const SubCheck& check(const std::string& name) const;
};

/// {name, n_interior, samples, worst_value, tolerance, passed, seed, checks}.
std::string to_json(const PropertyReport& report, int indent = 2);

using Operator = std::function<Field(const Field&)>;

/// Uniform[-1, 1] nodal values rescaled to the requested H-norm.
StateU random_state(const GridPtr& grid, std::mt19937_64& rng, double target_norm);

/// <A U, U> <= 1e-10 ||U||^2 and <A U, U> = -(|u|_1^2 + |v|_1^2) to 1e-10
/// relative. `op` defaults to the discrete Laplacian; passing a different
/// operator is a mutation hook.
PropertyReport check_dissipativity(std::size_t n_samples, const GridPtr& grid,
                                   std::uint64_t seed, Operator op = {});

/// (I - A_h) U = g solved with residual <= 1e-12 ||g||_inf, and the two
/// elimination orders agreeing to 1e-12 ||g||_inf.
PropertyReport check_maximality(std::size_t n_samples, const GridPtr& grid,
                                std::uint64_t seed);

/// Contraction at every t in `times`, S(0) = I, S(t+s) = S(t)S(s) to 1e-12,
/// monotone ||S(t)U - U|| as t halves from 1 to below 1e-6, and first-order
/// generator consistency ||(S(t)U - U)/t - A_h U|| = O(t).
PropertyReport check_semigroup(std::size_t n_samples, const GridPtr& grid,
                               std::uint64_t seed, const std::vector<double>& times);

/// For each C, n_samples pairs with ||U||, ||V|| <= C; every ratio must stay
/// below 4*sqrt(3)*C + 1e-9. The sub-check worst_value is the largest ratio
/// seen.
PropertyReport check_lipschitz(std::size_t n_samples, const GridPtr& grid,
                               std::uint64_t seed, const std::vector<double>& C_levels);

}  // namespace pdae::verification
