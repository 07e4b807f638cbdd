#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdae/integrators.hpp"
#include "pdae/nonlinearity.hpp"
#include "pdae/verification.hpp"

// Batch front door: scenario configuration, the manufactured-solution
// family, and the drivers behind the `run`, `converge`, `verify` and
// `mms-sources` subcommands.
namespace pdae::scenario {

enum class ScenarioKind { decay, mms, growth_probe, custom };

std::string to_string(ScenarioKind kind);
ScenarioKind parse_scenario(const std::string& name);

/// u*(t,x) = a e^{-t} sin(pi x), v*(t,x) = b e^{-t} sin(2 pi x).
///
/// The pair satisfies the Dirichlet conditions for u and v but not the
/// compatibility int_0^1 int_0^y (u* + v*) = 0, so w*(1) != 0 on every MMS
/// run; the w(1) diagnostic is exercised on purpose.
struct MmsSpec {
  double a = 1.0;
  double b = 1.0;
};

StateU mms_exact(const MmsSpec& spec, const GridPtr& grid, double t);

/// Sources that make (u*, v*) an exact solution of the index-reduced system:
///   f = u*_t - d_u u*_xx + u* J,   g = v*_t - d_v v*_xx - v* J,
///   J = int_0^x (p_u u* + p_v v*)   (all in closed form).
nonlinearity::SourcePair build_mms_sources(const MmsSpec& spec, const GridPtr& grid,
                                           const nonlinearity::CoefficientSet& C = {});

/// Fully resolved scenario. Parsed from a single JSON document; missing keys
/// take scenario-dependent defaults and unknown keys are rejected.
struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::decay;
  std::size_t n_interior = 64;
  double dt = 1e-3;
  double t_end = 1.0;
  integrators::Method method = integrators::Method::exp_euler;
  nonlinearity::CoefficientSet coefficients;
  /// zero | decay | mms | growth_probe | file
  std::string initial_condition = "decay";
  /// CSV with columns x,u,v when initial_condition = file.
  std::string initial_condition_file;
  /// zero | mms | file
  std::string source = "zero";
  /// CSV with columns t,x,f,g when source = file.
  std::string source_file;
  MmsSpec mms;
  double blowup_threshold = 1e6;
  int snapshot_every = 10;
  int picard_max_iter = 25;
  double picard_tol = 1e-10;
  int picard_substeps = 4;
  std::string output_dir = "pdae_out";
  std::uint64_t seed = 0;

  integrators::SolveConfig solve_config() const;
  /// Throws std::invalid_argument with the offending key.
  void validate() const;
};

/// Defaults for a scenario before any key is applied.
ScenarioConfig defaults_for(ScenarioKind kind);

ScenarioConfig config_from_json(const std::string& text);
ScenarioConfig load_config(const std::string& path);
/// Every key, resolved; feeding the text back to config_from_json
/// reproduces the configuration.
std::string config_to_json(const ScenarioConfig& cfg, int indent = 2);

StateU initial_state(const ScenarioConfig& cfg, const GridPtr& grid);
nonlinearity::SourcePair make_sources(const ScenarioConfig& cfg, const GridPtr& grid);

/// Exit codes of run_scenario: 0 completed, 2 blow-up detected, 1 otherwise.
int exit_code(integrators::Status status);

struct RunResult {
  integrators::Trajectory trajectory;
  int exit_code = 1;
  /// Terminal H-error against the manufactured solution (mms sources only).
  double mms_error = -1.0;
};

/// Runs the scenario and writes into cfg.output_dir:
///   trajectory.csv   t,x,u,v,w per snapshot, boundary rows included
///   trajectory.dat   the same as whitespace columns, one gnuplot block per t
///   constraint.csv   t,residual_l2,w_at_1
///   mms_errors.csv   t,error_H,error_u,error_v (mms sources only)
///   summary.json     status, work counters, norms, seed, config echo
/// Output is byte-identical for identical configurations.
RunResult run_scenario(const ScenarioConfig& cfg, bool write_artifacts = true);

struct ConvergenceRow {
  double dt = 0.0;
  std::size_t n_interior = 0;
  double error_H = 0.0;
  /// NaN on the first row of a sweep.
  double observed_order = 0.0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> temporal;
  std::vector<ConvergenceRow> spatial;
  /// Spatial error estimate at the temporal sweep's grid and finest dt.
  double spatial_floor_estimate = 0.0;
  /// Temporal error estimate at the spatial sweep's dt and finest grid.
  double temporal_floor_estimate = 0.0;
  /// spatial_floor_estimate <= 10% of the finest temporal error.
  bool spatial_floor_ok = false;
  /// temporal_floor_estimate <= 10% of the finest spatial error.
  bool temporal_floor_ok = false;
};

/// MMS order study. Temporal sweep over dt_levels at cfg.n_interior; spatial
/// sweep over n_levels at cfg.dt. Sweep points run on worker threads. Writes
/// convergence_temporal.csv, convergence_spatial.csv (dt,n_interior,error_H,
/// observed_order) and convergence_summary.json when write_artifacts is set.
/// Throws std::invalid_argument unless cfg.scenario is mms.
ConvergenceStudy run_convergence(const ScenarioConfig& cfg, const std::vector<double>& dt_levels,
                                 const std::vector<std::size_t>& n_levels,
                                 bool write_artifacts = true);

struct VerificationOptions {
  std::vector<std::size_t> sizes{16, 64, 256};
  std::uint64_t seed = 0;
  std::size_t dissipativity_samples = 1000;
  std::size_t maximality_samples = 1000;
  std::size_t semigroup_samples = 100;
  std::vector<double> semigroup_times{0.0, 0.01, 0.1, 1.0};
  std::size_t lipschitz_samples = 10000;
  std::vector<double> lipschitz_levels{0.5, 1.0, 5.0};
  /// Mutation hook: run the dissipativity check against -A_h.
  bool flip_laplacian_sign = false;
};

struct VerificationRun {
  std::vector<verification::PropertyReport> reports;
  bool all_passed = false;
  /// Consolidated JSON document.
  std::string json;
};

VerificationRun run_verification(const VerificationOptions& opts);

/// Writes sources sampled at `times` as CSV t,x,f,g, boundary rows included;
/// the format accepted by nonlinearity::load_tabulated_sources.
void write_source_table(const nonlinearity::SourcePair& S, const std::vector<double>& times,
                        const std::string& path);

}  // namespace pdae::scenario
