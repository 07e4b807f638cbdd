#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdae/constraint.hpp"
#include "pdae/field.hpp"
#include "pdae/nonlinearity.hpp"

namespace pdae::integrators {

using nonlinearity::CoefficientSet;
using nonlinearity::SourcePair;

enum class Method { exp_euler, picard, imex };

std::string to_string(Method m);
/// Accepts "exp_euler", "picard", "imex"; throws std::invalid_argument.
Method parse_method(const std::string& name);

struct SolveConfig {
  double dt = 1e-3;
  double t_end = 1.0;
  Method method = Method::exp_euler;
  int picard_max_iter = 25;
  double picard_tol = 1e-10;
  int picard_substeps = 4;
  double blowup_threshold = 1e6;
  int snapshot_every = 1;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

/// A step that produced a non-finite state or a Picard slab that did not
/// converge. `contraction` is the last observed iterate-difference ratio
/// when the failure comes from a Picard slab.
class StepFailure : public std::runtime_error {
 public:
  StepFailure(double t, const std::string& reason,
              std::optional<double> contraction = std::nullopt);

  double t() const noexcept { return t_; }
  const std::string& reason() const noexcept { return reason_; }
  std::optional<double> contraction() const noexcept { return contraction_; }

 private:
  double t_;
  std::string reason_;
  std::optional<double> contraction_;
};

/// U_{n+1} = S(dt) U_n + dt * phi1(dt A) F(U_n, t_n).
StateU step_exp_euler(const StateU& Un, double tn, double dt, const SourcePair& S,
                      const CoefficientSet& C = {});

struct PicardResult {
  StateU state;
  int iterations = 0;
  /// Largest ratio of successive iterate differences, over pairs where both
  /// differences sit above round-off; 0 when fewer than two such pairs exist.
  double contraction = 0.0;
  /// Max-over-substeps H-norm of each iterate update.
  std::vector<double> updates;
};

/// One slab of the mild-solution fixed point
///   U(tn + tau) = S(tau) Un + int_0^tau S(tau - s) F(U(tn + s)) ds
/// on picard_substeps uniform samples, the integral by trapezoid in s. The
/// iteration starts from the exponential-Euler predictor and stops once an
/// update is below picard_tol. Throws StepFailure after picard_max_iter.
PicardResult picard_slab(const StateU& Un, double tn, double dt, const SolveConfig& cfg,
                         const SourcePair& S, const CoefficientSet& C = {});

/// (I - dt*d*A_h) U_{n+1} = U_n + dt F(U_n, t_n), per component.
StateU step_imex(const StateU& Un, double tn, double dt, const SourcePair& S,
                 const CoefficientSet& C = {});

enum class Status { completed, blowup_detected, step_failure };

std::string to_string(Status s);

struct Termination {
  Status status = Status::completed;
  /// Detection time for blowup_detected, failing step start for step_failure,
  /// final time otherwise.
  double t = 0.0;
  std::string reason;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StateU> states;
  std::vector<Field> w_fields;
  std::vector<constraint::ConstraintReport> reports;
  Termination termination;

  /// ||U_n|| at every accepted step, including t = 0.
  std::vector<double> norm_history;
  std::size_t steps = 0;
  std::size_t picard_iterations = 0;
  double max_picard_contraction = 0.0;
  /// max_n |(||U_{n+1}|| - ||U_n||)| / dt_n over accepted steps.
  double max_norm_rate = 0.0;

  Status status() const noexcept { return termination.status; }
};

/// Marches from 0 to t_end with fixed steps (the last one shortened if dt
/// does not divide t_end). Snapshots, each with the reconstructed w and its
/// constraint report, are taken at t = 0, every snapshot_every steps, and at
/// the final accepted state. Halts with blowup_detected once ||U|| reaches
/// blowup_threshold: a finite-time blow-up candidate, not a proof.
Trajectory solve(const StateU& U0, const SolveConfig& cfg, const SourcePair& S,
                 const CoefficientSet& C = {});

}  // namespace pdae::integrators
