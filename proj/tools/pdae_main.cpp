// pdae: batch driver for the reaction-diffusion PDAE solver.
//
//   pdae run         --config cfg.json [--dt 1e-4 ...]
//   pdae converge    --config mms.json [--dt-levels ...] [--n-levels ...]
//   pdae verify      [--sizes 16 64 256] [--seed 0] [--output report.json]
//   pdae mms-sources [--n-interior 64] [--times 0 0.5 1] [--output f.csv]
//
// Exit codes: 0 success, 2 blow-up detected (run only), 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdae/csv.hpp"
#include "pdae/scenario.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace pdae;

enum class KeyType { integer, real, text };

struct ConfigKey {
  const char* key;
  KeyType type;
  const char* help;
};

constexpr ConfigKey kConfigKeys[] = {
    {"scenario", KeyType::text, "decay | mms | growth_probe | custom"},
    {"n_interior", KeyType::integer, "interior grid nodes"},
    {"dt", KeyType::real, "time step"},
    {"t_end", KeyType::real, "final time"},
    {"method", KeyType::text, "exp_euler | picard | imex"},
    {"d_u", KeyType::real, "diffusion coefficient of u"},
    {"d_v", KeyType::real, "diffusion coefficient of v"},
    {"p_u", KeyType::real, "weight of u in the constraint"},
    {"p_v", KeyType::real, "weight of v in the constraint"},
    {"initial_condition", KeyType::text, "zero | decay | mms | growth_probe | file"},
    {"initial_condition_file", KeyType::text, "CSV with columns x,u,v"},
    {"source", KeyType::text, "zero | mms | file"},
    {"source_file", KeyType::text, "CSV with columns t,x,f,g"},
    {"mms_a", KeyType::real, "manufactured amplitude of u"},
    {"mms_b", KeyType::real, "manufactured amplitude of v"},
    {"blowup_threshold", KeyType::real, "H-norm that halts the run"},
    {"snapshot_every", KeyType::integer, "steps between snapshots"},
    {"picard_max_iter", KeyType::integer, "Picard iteration cap per slab"},
    {"picard_tol", KeyType::real, "Picard update tolerance"},
    {"picard_substeps", KeyType::integer, "quadrature samples per Picard slab"},
    {"output_dir", KeyType::text, "directory for artifacts"},
    {"seed", KeyType::integer, "RNG seed echoed into artifacts"},
};

/// Config flags mirror the JSON keys (`n_interior` -> `--n-interior`); any
/// flag given on the command line overrides the file value.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> raw;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "JSON scenario configuration")
        ->check(CLI::ExistingFile);
    for (const auto& k : kConfigKeys) {
      std::string flag = std::string("--") + k.key;
      for (auto& c : flag) {
        if (c == '_') c = '-';
      }
      options[k.key] = app.add_option(flag, raw[k.key], k.help);
    }
  }

  Json document() const {
    Json doc = Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
      try {
        doc = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw std::invalid_argument(config_path + ": invalid JSON: " + e.what());
      }
      if (!doc.is_object()) {
        throw std::invalid_argument(config_path + ": top level must be a JSON object");
      }
    }
    for (const auto& k : kConfigKeys) {
      if (options.at(k.key)->count() == 0) continue;
      doc[k.key] = convert(k, raw.at(k.key));
    }
    return doc;
  }

  scenario::ScenarioConfig resolve() const {
    const Json doc = document();
    try {
      return scenario::config_from_json(doc.dump());
    } catch (const std::invalid_argument& e) {
      if (config_path.empty()) throw;
      throw std::invalid_argument(config_path + ": " + e.what());
    }
  }

  static Json convert(const ConfigKey& k, const std::string& text) {
    const char* first = text.data();
    const char* last = first + text.size();
    switch (k.type) {
      case KeyType::integer: {
        if (!text.empty() && text[0] != '-') {
          std::uint64_t value = 0;
          auto [p, ec] = std::from_chars(first, last, value);
          if (ec == std::errc() && p == last) return value;
        } else {
          std::int64_t value = 0;
          auto [p, ec] = std::from_chars(first, last, value);
          if (ec == std::errc() && p == last) return value;
        }
        throw std::invalid_argument(std::string("--") + k.key + ": expected an integer, got '" +
                                    text + "'");
      }
      case KeyType::real: {
        double value = 0.0;
        auto [p, ec] = std::from_chars(first, last, value);
        if (ec == std::errc() && p == last) return value;
        throw std::invalid_argument(std::string("--") + k.key + ": expected a number, got '" +
                                    text + "'");
      }
      case KeyType::text:
        return text;
    }
    return text;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_run(const ConfigFlags& flags) {
  const auto cfg = flags.resolve();
  Stopwatch clock;
  const auto result = scenario::run_scenario(cfg);
  const auto& traj = result.trajectory;
  std::printf("status: %s at t = %.6g (%zu steps)\n",
              integrators::to_string(traj.status()).c_str(), traj.termination.t, traj.steps);
  if (!traj.termination.reason.empty()) {
    std::printf("reason: %s\n", traj.termination.reason.c_str());
  }
  std::printf("final ||U||_H = %.6e\n", norm(traj.states.back()));
  if (result.mms_error >= 0.0) std::printf("mms error_H = %.6e\n", result.mms_error);
  std::printf("artifacts: %s\n", cfg.output_dir.c_str());
  std::fprintf(stderr, "wall time: %.3f s\n", clock.seconds());
  return result.exit_code;
}

void print_rows(const char* title, const std::vector<scenario::ConvergenceRow>& rows) {
  std::printf("%s\n  %-12s %-10s %-14s %s\n", title, "dt", "n", "error_H", "order");
  for (const auto& r : rows) {
    std::printf("  %-12.4g %-10zu %-14.6e %.3f\n", r.dt, r.n_interior, r.error_H,
                r.observed_order);
  }
}

int cmd_converge(const ConfigFlags& flags, const std::vector<double>& dt_levels,
                 const std::vector<std::size_t>& n_levels) {
  const auto cfg = flags.resolve();
  Stopwatch clock;
  const auto study = scenario::run_convergence(cfg, dt_levels, n_levels);
  print_rows("temporal sweep", study.temporal);
  print_rows("spatial sweep", study.spatial);
  std::printf("spatial floor estimate %.3e (%s), temporal floor estimate %.3e (%s)\n",
              study.spatial_floor_estimate, study.spatial_floor_ok ? "ok" : "too large",
              study.temporal_floor_estimate, study.temporal_floor_ok ? "ok" : "too large");
  std::printf("artifacts: %s\n", cfg.output_dir.c_str());
  std::fprintf(stderr, "wall time: %.3f s\n", clock.seconds());
  return 0;
}

int cmd_verify(const scenario::VerificationOptions& opts, const std::string& output) {
  Stopwatch clock;
  const auto run = scenario::run_verification(opts);
  for (const auto& r : run.reports) {
    std::printf("%-14s n=%-5zu %s\n", r.name.c_str(), r.n_interior, r.passed ? "PASS" : "FAIL");
    for (const auto& c : r.checks) {
      std::printf("    %-38s %.3e <= %.3e %s\n", c.name.c_str(), c.worst_value, c.tolerance,
                  c.passed ? "" : "FAILED");
    }
  }
  if (output == "-") {
    std::fputs(run.json.c_str(), stdout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + output + "' for writing");
    out << run.json;
    if (!out) throw std::runtime_error("write failed for '" + output + "'");
    std::printf("report: %s\n", output.c_str());
  }
  std::fprintf(stderr, "wall time: %.3f s\n", clock.seconds());
  return run.all_passed ? 0 : 1;
}

int cmd_mms_sources(const ConfigFlags& flags, const std::vector<double>& times,
                    const std::string& output) {
  auto doc = flags.document();
  if (!doc.contains("scenario")) doc["scenario"] = "mms";
  const auto cfg = scenario::config_from_json(doc.dump());
  const auto grid = Grid1D::make(cfg.n_interior);
  const auto sources = scenario::build_mms_sources(cfg.mms, grid, cfg.coefficients);
  scenario::write_source_table(sources, times, output);
  std::printf("sources: %s (%zu time slices, n_interior = %zu)\n", output.c_str(), times.size(),
              cfg.n_interior);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup solver and verification suite for a reaction-diffusion PDAE"};
  app.require_subcommand(1);

  ConfigFlags run_flags;
  auto* run = app.add_subcommand("run", "integrate one scenario and write artifacts");
  run_flags.attach(*run);

  ConfigFlags conv_flags;
  std::vector<double> dt_levels{0.02, 0.01, 0.005, 0.0025, 0.00125};
  std::vector<std::size_t> n_levels{15, 31, 63, 127};
  auto* converge = app.add_subcommand("converge", "manufactured-solution order study");
  conv_flags.attach(*converge);
  converge->add_option("--dt-levels", dt_levels, "temporal sweep step sizes")
      ->capture_default_str();
  converge->add_option("--n-levels", n_levels, "spatial sweep interior sizes")
      ->capture_default_str();

  scenario::VerificationOptions vopts;
  std::string verify_output = "verification.json";
  auto* verify = app.add_subcommand("verify", "run the operator property checks");
  verify->add_option("--sizes", vopts.sizes, "interior sizes")->capture_default_str();
  verify->add_option("--seed", vopts.seed, "RNG seed")->capture_default_str();
  verify->add_option("--dissipativity-samples", vopts.dissipativity_samples)
      ->capture_default_str();
  verify->add_option("--maximality-samples", vopts.maximality_samples)->capture_default_str();
  verify->add_option("--semigroup-samples", vopts.semigroup_samples)->capture_default_str();
  verify->add_option("--semigroup-times", vopts.semigroup_times)->capture_default_str();
  verify->add_option("--lipschitz-samples", vopts.lipschitz_samples)->capture_default_str();
  verify->add_option("--lipschitz-levels", vopts.lipschitz_levels)->capture_default_str();
  verify->add_option("--output", verify_output, "report path, '-' for stdout")
      ->capture_default_str();
  verify->add_flag("--flip-laplacian-sign", vopts.flip_laplacian_sign)->group("");

  ConfigFlags mms_flags;
  std::vector<double> times{0.0, 0.25, 0.5, 0.75, 1.0};
  std::string mms_output = "mms_sources.csv";
  auto* mms = app.add_subcommand("mms-sources", "tabulate manufactured sources f, g");
  mms_flags.attach(*mms);
  mms->add_option("--times", times, "sample times")->capture_default_str();
  mms->add_option("--output", mms_output, "CSV path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*run) return cmd_run(run_flags);
    if (*converge) return cmd_converge(conv_flags, dt_levels, n_levels);
    if (*verify) return cmd_verify(vopts, verify_output);
    if (*mms) return cmd_mms_sources(mms_flags, times, mms_output);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pdae: error: %s\n", e.what());
    return 1;
  }
  return 1;
}
