#include "pdae/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json_io.hpp"
#include "pdae/constraint.hpp"
#include "pdae/csv.hpp"
#include "pdae/spectral.hpp"

namespace pdae::scenario {

using detail::Json;
using integrators::Method;
using integrators::Status;
using nonlinearity::CoefficientSet;
using nonlinearity::SourceKind;
using nonlinearity::SourcePair;

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::decay: return "decay";
    case ScenarioKind::mms: return "mms";
    case ScenarioKind::growth_probe: return "growth_probe";
    case ScenarioKind::custom: return "custom";
  }
  return "unknown";
}

ScenarioKind parse_scenario(const std::string& name) {
  if (name == "decay") return ScenarioKind::decay;
  if (name == "mms") return ScenarioKind::mms;
  if (name == "growth_probe") return ScenarioKind::growth_probe;
  if (name == "custom") return ScenarioKind::custom;
  throw std::invalid_argument("unknown scenario '" + name +
                              "' (expected decay, mms, growth_probe or custom)");
}

// ---------------------------------------------------------------------------
// Manufactured solution

StateU mms_exact(const MmsSpec& spec, const GridPtr& grid, double t) {
  const double decay = std::exp(-t);
  const double pi = std::numbers::pi;
  return {Field::sample(grid, [&](double x) { return spec.a * decay * std::sin(pi * x); }),
          Field::sample(grid, [&](double x) { return spec.b * decay * std::sin(2.0 * pi * x); })};
}

SourcePair build_mms_sources(const MmsSpec& spec, const GridPtr& grid, const CoefficientSet& C) {
  const double pi = std::numbers::pi;
  // J(t,x) = e^{-t} (p_u a (1 - cos pi x)/pi + p_v b (1 - cos 2 pi x)/(2 pi))
  const auto J = [=](double t, double x) {
    return std::exp(-t) * (C.p_u * spec.a * (1.0 - std::cos(pi * x)) / pi +
                           C.p_v * spec.b * (1.0 - std::cos(2.0 * pi * x)) / (2.0 * pi));
  };
  auto f = [=](double t) {
    return Field::sample(grid, [&](double x) {
      const double u = spec.a * std::exp(-t) * std::sin(pi * x);
      // u_t = -u, u_xx = -pi^2 u
      return -u + C.d_u * pi * pi * u + u * J(t, x);
    });
  };
  auto g = [=](double t) {
    return Field::sample(grid, [&](double x) {
      const double v = spec.b * std::exp(-t) * std::sin(2.0 * pi * x);
      // v_t = -v, v_xx = -4 pi^2 v
      return -v + C.d_v * 4.0 * pi * pi * v - v * J(t, x);
    });
  };
  return {grid, SourceKind::mms, f, g};
}

// ---------------------------------------------------------------------------
// Configuration

integrators::SolveConfig ScenarioConfig::solve_config() const {
  integrators::SolveConfig sc;
  sc.dt = dt;
  sc.t_end = t_end;
  sc.method = method;
  sc.picard_max_iter = picard_max_iter;
  sc.picard_tol = picard_tol;
  sc.picard_substeps = picard_substeps;
  sc.blowup_threshold = blowup_threshold;
  sc.snapshot_every = snapshot_every;
  return sc;
}

void ScenarioConfig::validate() const {
  if (n_interior == 0 || n_interior > Grid1D::kMaxInterior) {
    throw std::invalid_argument("config: n_interior must be in [1, " +
                                std::to_string(Grid1D::kMaxInterior) + "]");
  }
  solve_config().validate();
  coefficients.validate();
  static const char* ics[] = {"zero", "decay", "mms", "growth_probe", "file"};
  if (std::find(std::begin(ics), std::end(ics), initial_condition) == std::end(ics)) {
    throw std::invalid_argument("config: unknown initial_condition '" + initial_condition + "'");
  }
  if (source != "zero" && source != "mms" && source != "file") {
    throw std::invalid_argument("config: unknown source '" + source + "'");
  }
  if (initial_condition == "file" && !std::filesystem::exists(initial_condition_file)) {
    throw std::invalid_argument("config: initial_condition_file '" + initial_condition_file +
                                "' does not exist");
  }
  if (source == "file" && !std::filesystem::exists(source_file)) {
    throw std::invalid_argument("config: source_file '" + source_file + "' does not exist");
  }
  if (!std::isfinite(mms.a) || !std::isfinite(mms.b)) {
    throw std::invalid_argument("config: mms amplitudes must be finite");
  }
}

ScenarioConfig defaults_for(ScenarioKind kind) {
  ScenarioConfig cfg;
  cfg.scenario = kind;
  switch (kind) {
    case ScenarioKind::decay:
      cfg.initial_condition = "decay";
      cfg.source = "zero";
      break;
    case ScenarioKind::mms:
      cfg.initial_condition = "mms";
      cfg.source = "mms";
      cfg.t_end = 0.5;
      break;
    case ScenarioKind::growth_probe:
      cfg.initial_condition = "growth_probe";
      cfg.source = "zero";
      cfg.dt = 1e-4;
      cfg.blowup_threshold = 1e3;
      cfg.snapshot_every = 100;
      break;
    case ScenarioKind::custom:
      cfg.initial_condition = "zero";
      cfg.source = "zero";
      break;
  }
  return cfg;
}

namespace {

template <class T>
T get_as(const Json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument("config: bad value for '" + key + "': " + e.what());
  }
}

int get_int(const Json& value, const std::string& key) {
  if (!value.is_number_integer()) {
    throw std::invalid_argument("config: '" + key + "' must be an integer");
  }
  return get_as<int>(value, key);
}

double get_real(const Json& value, const std::string& key) {
  if (!value.is_number()) throw std::invalid_argument("config: '" + key + "' must be a number");
  return get_as<double>(value, key);
}

std::string get_string(const Json& value, const std::string& key) {
  if (!value.is_string()) throw std::invalid_argument("config: '" + key + "' must be a string");
  return get_as<std::string>(value, key);
}

}  // namespace

ScenarioConfig config_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: top level must be a JSON object");

  ScenarioKind kind = ScenarioKind::decay;
  if (doc.contains("scenario")) kind = parse_scenario(get_string(doc["scenario"], "scenario"));
  ScenarioConfig cfg = defaults_for(kind);

  for (const auto& [key, value] : doc.items()) {
    if (key == "scenario") continue;
    if (key == "n_interior") {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() > 0)) {
        throw std::invalid_argument("config: 'n_interior' must be a positive integer");
      }
      cfg.n_interior = value.get<std::size_t>();
    } else if (key == "dt") {
      cfg.dt = get_real(value, key);
    } else if (key == "t_end") {
      cfg.t_end = get_real(value, key);
    } else if (key == "method") {
      cfg.method = integrators::parse_method(get_string(value, key));
    } else if (key == "d_u") {
      cfg.coefficients.d_u = get_real(value, key);
    } else if (key == "d_v") {
      cfg.coefficients.d_v = get_real(value, key);
    } else if (key == "p_u") {
      cfg.coefficients.p_u = get_real(value, key);
    } else if (key == "p_v") {
      cfg.coefficients.p_v = get_real(value, key);
    } else if (key == "initial_condition") {
      cfg.initial_condition = get_string(value, key);
    } else if (key == "initial_condition_file") {
      cfg.initial_condition_file = get_string(value, key);
    } else if (key == "source") {
      cfg.source = get_string(value, key);
    } else if (key == "source_file") {
      cfg.source_file = get_string(value, key);
    } else if (key == "mms_a") {
      cfg.mms.a = get_real(value, key);
    } else if (key == "mms_b") {
      cfg.mms.b = get_real(value, key);
    } else if (key == "blowup_threshold") {
      cfg.blowup_threshold = get_real(value, key);
    } else if (key == "snapshot_every") {
      cfg.snapshot_every = get_int(value, key);
    } else if (key == "picard_max_iter") {
      cfg.picard_max_iter = get_int(value, key);
    } else if (key == "picard_tol") {
      cfg.picard_tol = get_real(value, key);
    } else if (key == "picard_substeps") {
      cfg.picard_substeps = get_int(value, key);
    } else if (key == "output_dir") {
      cfg.output_dir = get_string(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) {
        throw std::invalid_argument("config: 'seed' must be a non-negative integer");
      }
      cfg.seed = value.get<std::uint64_t>();
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return config_from_json(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

namespace {

Json config_json(const ScenarioConfig& cfg) {
  return Json{{"scenario", to_string(cfg.scenario)},
              {"n_interior", cfg.n_interior},
              {"dt", cfg.dt},
              {"t_end", cfg.t_end},
              {"method", integrators::to_string(cfg.method)},
              {"d_u", cfg.coefficients.d_u},
              {"d_v", cfg.coefficients.d_v},
              {"p_u", cfg.coefficients.p_u},
              {"p_v", cfg.coefficients.p_v},
              {"initial_condition", cfg.initial_condition},
              {"initial_condition_file", cfg.initial_condition_file},
              {"source", cfg.source},
              {"source_file", cfg.source_file},
              {"mms_a", cfg.mms.a},
              {"mms_b", cfg.mms.b},
              {"blowup_threshold", cfg.blowup_threshold},
              {"snapshot_every", cfg.snapshot_every},
              {"picard_max_iter", cfg.picard_max_iter},
              {"picard_tol", cfg.picard_tol},
              {"picard_substeps", cfg.picard_substeps},
              {"output_dir", cfg.output_dir},
              {"seed", cfg.seed}};
}

}  // namespace

std::string config_to_json(const ScenarioConfig& cfg, int indent) {
  return config_json(cfg).dump(indent);
}

// ---------------------------------------------------------------------------
// Initial data and sources

namespace {

StateU load_initial_state(const std::string& path, const GridPtr& grid) {
  const csv::Table table = csv::read(path);
  const std::size_t cx = table.column("x");
  const std::size_t cu = table.column("u");
  const std::size_t cv = table.column("v");
  const std::size_t n = grid->n_interior();
  StateU U(grid);
  std::vector<bool> seen(n, false);
  for (const auto& row : table.rows) {
    const double x = row[cx];
    const double j_real = std::round(x / grid->h());
    if (std::abs(x - j_real * grid->h()) > 1e-9 || j_real < 0.0 ||
        j_real > static_cast<double>(n + 1)) {
      throw std::runtime_error("initial condition '" + path + "': x = " + csv::format(x) +
                               " is not a grid node");
    }
    const auto j = static_cast<std::size_t>(j_real);
    if (!std::isfinite(row[cu]) || !std::isfinite(row[cv])) {
      throw std::runtime_error("initial condition '" + path + "': non-finite value");
    }
    if (j == 0 || j == n + 1) continue;
    if (seen[j - 1]) {
      throw std::runtime_error("initial condition '" + path + "': duplicate node x = " +
                               csv::format(x));
    }
    seen[j - 1] = true;
    U.u[j - 1] = row[cu];
    U.v[j - 1] = row[cv];
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::runtime_error("initial condition '" + path + "' does not cover every interior node");
  }
  return U;
}

}  // namespace

StateU initial_state(const ScenarioConfig& cfg, const GridPtr& grid) {
  const double pi = std::numbers::pi;
  const auto& ic = cfg.initial_condition;
  if (ic == "zero") return StateU(grid);
  if (ic == "decay") {
    return {Field::sample(grid, [&](double x) { return 0.1 * std::sin(pi * x); }),
            Field::sample(grid, [&](double x) { return 0.1 * std::sin(2.0 * pi * x); })};
  }
  if (ic == "mms") return mms_exact(cfg.mms, grid, 0.0);
  if (ic == "growth_probe") {
    return {Field(grid), Field::sample(grid, [&](double x) { return 50.0 * std::sin(pi * x); })};
  }
  if (ic == "file") return load_initial_state(cfg.initial_condition_file, grid);
  throw std::invalid_argument("unknown initial_condition '" + ic + "'");
}

SourcePair make_sources(const ScenarioConfig& cfg, const GridPtr& grid) {
  if (cfg.source == "zero") return SourcePair::zero(grid);
  if (cfg.source == "mms") return build_mms_sources(cfg.mms, grid, cfg.coefficients);
  if (cfg.source == "file") return nonlinearity::load_tabulated_sources(cfg.source_file, grid);
  throw std::invalid_argument("unknown source '" + cfg.source + "'");
}

int exit_code(Status status) {
  switch (status) {
    case Status::completed: return 0;
    case Status::blowup_detected: return 2;
    case Status::step_failure: return 1;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// run

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_trajectory(const integrators::Trajectory& traj, const std::filesystem::path& dir) {
  csv::Writer table((dir / "trajectory.csv").string());
  csv::Writer plot((dir / "trajectory.dat").string());
  table.line("t,x,u,v,w");
  plot.line("# t x u v w");
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    const auto& U = traj.states[s];
    const auto& w = traj.w_fields[s];
    const auto& grid = U.grid();
    if (s > 0) {
      plot.line("");
      plot.line("");
    }
    for (std::size_t j = 0; j <= grid.n_interior() + 1; ++j) {
      const std::vector<double> row{traj.times[s], grid.x(j), U.u.at_node(j), U.v.at_node(j),
                                    w.at_node(j)};
      table.row(row);
      plot.row(row, ' ');
    }
  }
  table.close();
  plot.close();
}

void write_constraints(const integrators::Trajectory& traj, const std::filesystem::path& dir) {
  csv::Writer out((dir / "constraint.csv").string());
  out.line("t,residual_l2,w_at_1");
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    out.row({traj.times[s], traj.reports[s].residual_l2, traj.reports[s].w_at_1});
  }
  out.close();
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& cfg, bool write_artifacts) {
  cfg.validate();
  const GridPtr grid = Grid1D::make(cfg.n_interior);
  const StateU U0 = initial_state(cfg, grid);
  const SourcePair S = make_sources(cfg, grid);

  RunResult result;
  result.trajectory = integrators::solve(U0, cfg.solve_config(), S, cfg.coefficients);
  const auto& traj = result.trajectory;
  result.exit_code = exit_code(traj.status());

  const bool mms_reference = cfg.source == "mms";
  std::vector<std::vector<double>> mms_rows;
  if (mms_reference) {
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
      const StateU exact = mms_exact(cfg.mms, grid, traj.times[s]);
      const StateU err = traj.states[s] - exact;
      mms_rows.push_back({traj.times[s], norm(err), l2_norm(err.u), l2_norm(err.v)});
    }
    result.mms_error = mms_rows.back()[1];
  }

  if (!write_artifacts) return result;

  const std::filesystem::path dir(cfg.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + dir.string() + "': " +
                             ec.message());
  }
  write_trajectory(traj, dir);
  write_constraints(traj, dir);
  if (mms_reference) {
    csv::Writer out((dir / "mms_errors.csv").string());
    out.line("t,error_H,error_u,error_v");
    for (const auto& row : mms_rows) out.row(row);
    out.close();
  }

  const StateU& last = traj.states.back();
  const auto& last_report = traj.reports.back();
  Json summary{
      {"status", integrators::to_string(traj.status())},
      {"exit_code", result.exit_code},
      {"t_event", traj.termination.t},
      {"reason", traj.termination.reason},
      {"timings",
       Json{{"steps", traj.steps},
            {"picard_iterations", traj.picard_iterations},
            {"snapshots", traj.times.size()}}},
      {"norms",
       Json{{"initial_H", traj.norm_history.front()},
            {"final_H", norm(last)},
            {"final_u", l2_norm(last.u)},
            {"final_v", l2_norm(last.v)},
            {"max_norm_rate", traj.max_norm_rate}}},
      {"final_snapshot",
       Json{{"t", traj.times.back()},
            {"residual_l2", last_report.residual_l2},
            {"w_at_0", last_report.w_at_0},
            {"wx_at_0", last_report.wx_at_0},
            {"w_at_1", last_report.w_at_1}}},
  };
  if (traj.status() == Status::blowup_detected) {
    summary["blowup"] = Json{{"t_detect", traj.termination.t},
                             {"threshold", cfg.blowup_threshold},
                             {"dt", cfg.dt},
                             {"method", integrators::to_string(cfg.method)},
                             {"note", "threshold crossing; a candidate for finite-time blow-up, "
                                      "not a value of t_max"}};
  }
  if (mms_reference) summary["mms_error_H"] = result.mms_error;
  if (cfg.method == Method::picard) {
    summary["max_picard_contraction"] = traj.max_picard_contraction;
  }
  summary["seed"] = cfg.seed;
  summary["config"] = config_json(cfg);
  write_text(dir / "summary.json", summary.dump(2) + "\n");
  return result;
}

// ---------------------------------------------------------------------------
// converge

namespace {

double order_between(double err_coarse, double err_fine, double step_coarse, double step_fine) {
  return std::log(err_coarse / err_fine) / std::log(step_coarse / step_fine);
}

void write_rows(const std::filesystem::path& path, const std::vector<ConvergenceRow>& rows) {
  csv::Writer out(path.string());
  out.line("dt,n_interior,error_H,observed_order");
  for (const auto& r : rows) {
    out.row({r.dt, static_cast<double>(r.n_interior), r.error_H, r.observed_order});
  }
  out.close();
}

Json rows_json(const std::vector<ConvergenceRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"dt", r.dt},
                       {"n_interior", r.n_interior},
                       {"error_H", r.error_H},
                       {"observed_order", std::isnan(r.observed_order)
                                              ? Json(nullptr)
                                              : Json(r.observed_order)}});
  }
  return out;
}

// Coarse-grid restriction: node j of the grid with n interior nodes is node
// 2j of the grid with 2n+1.
StateU restrict_to(const StateU& fine, const GridPtr& coarse) {
  StateU out(coarse);
  for (std::size_t i = 0; i < coarse->n_interior(); ++i) {
    out.u[i] = fine.u[2 * i + 1];
    out.v[i] = fine.v[2 * i + 1];
  }
  return out;
}

}  // namespace

ConvergenceStudy run_convergence(const ScenarioConfig& cfg, const std::vector<double>& dt_levels,
                                 const std::vector<std::size_t>& n_levels, bool write_artifacts) {
  if (cfg.scenario != ScenarioKind::mms || cfg.source != "mms") {
    throw std::invalid_argument("run_convergence: requires the mms scenario with mms sources");
  }
  if (dt_levels.size() < 2 || n_levels.size() < 2) {
    throw std::invalid_argument("run_convergence: need at least two dt and two n levels");
  }
  cfg.validate();

  auto variant = [&](double dt, std::size_t n) {
    ScenarioConfig c = cfg;
    c.dt = dt;
    c.n_interior = n;
    c.snapshot_every = std::numeric_limits<int>::max();
    return c;
  };
  auto launch = [](ScenarioConfig c) {
    return std::async(std::launch::async, [c = std::move(c)] { return run_scenario(c, false); });
  };

  const double dt_min = *std::min_element(dt_levels.begin(), dt_levels.end());
  const std::size_t n_max = *std::max_element(n_levels.begin(), n_levels.end());

  std::vector<std::future<RunResult>> temporal, spatial;
  for (double dt : dt_levels) temporal.push_back(launch(variant(dt, cfg.n_interior)));
  for (std::size_t n : n_levels) spatial.push_back(launch(variant(cfg.dt, n)));
  auto finer_grid = launch(variant(dt_min, 2 * cfg.n_interior + 1));
  auto finer_step = launch(variant(cfg.dt / 2.0, n_max));

  ConvergenceStudy study;
  std::vector<RunResult> temporal_runs, spatial_runs;
  for (auto& f : temporal) temporal_runs.push_back(f.get());
  for (auto& f : spatial) spatial_runs.push_back(f.get());
  const RunResult fine_grid_run = finer_grid.get();
  const RunResult fine_step_run = finer_step.get();

  const auto check_completed = [](const RunResult& r) {
    if (r.trajectory.status() != Status::completed) {
      throw std::runtime_error("run_convergence: sweep point did not complete (" +
                               integrators::to_string(r.trajectory.status()) + ")");
    }
  };
  for (const auto& r : temporal_runs) check_completed(r);
  for (const auto& r : spatial_runs) check_completed(r);
  check_completed(fine_grid_run);
  check_completed(fine_step_run);

  for (std::size_t i = 0; i < dt_levels.size(); ++i) {
    ConvergenceRow row{dt_levels[i], cfg.n_interior, temporal_runs[i].mms_error,
                       std::numeric_limits<double>::quiet_NaN()};
    if (i > 0) {
      row.observed_order = order_between(study.temporal.back().error_H, row.error_H,
                                         dt_levels[i - 1], dt_levels[i]);
    }
    study.temporal.push_back(row);
  }
  for (std::size_t i = 0; i < n_levels.size(); ++i) {
    ConvergenceRow row{cfg.dt, n_levels[i], spatial_runs[i].mms_error,
                       std::numeric_limits<double>::quiet_NaN()};
    if (i > 0) {
      const double h_prev = 1.0 / static_cast<double>(n_levels[i - 1] + 1);
      const double h = 1.0 / static_cast<double>(n_levels[i] + 1);
      row.observed_order = order_between(study.spatial.back().error_H, row.error_H, h_prev, h);
    }
    study.spatial.push_back(row);
  }

  // Spatial floor of the temporal sweep: the O(h^2) error at n is about 4/3
  // of the change when h halves. Temporal floor of the spatial sweep: the
  // O(dt) error at dt is about twice the change when dt halves.
  const std::size_t i_min = static_cast<std::size_t>(
      std::min_element(dt_levels.begin(), dt_levels.end()) - dt_levels.begin());
  const std::size_t i_nmax = static_cast<std::size_t>(
      std::max_element(n_levels.begin(), n_levels.end()) - n_levels.begin());
  const auto& coarse_final = temporal_runs[i_min].trajectory.states.back();
  const auto& fine_final = fine_grid_run.trajectory.states.back();
  study.spatial_floor_estimate =
      4.0 / 3.0 * norm(coarse_final - restrict_to(fine_final, coarse_final.grid_ptr()));
  study.temporal_floor_estimate =
      2.0 * norm(spatial_runs[i_nmax].trajectory.states.back() -
                 fine_step_run.trajectory.states.back());
  study.spatial_floor_ok =
      study.spatial_floor_estimate <= 0.1 * temporal_runs[i_min].mms_error;
  study.temporal_floor_ok =
      study.temporal_floor_estimate <= 0.1 * spatial_runs[i_nmax].mms_error;

  if (write_artifacts) {
    const std::filesystem::path dir(cfg.output_dir);
    std::filesystem::create_directories(dir);
    write_rows(dir / "convergence_temporal.csv", study.temporal);
    write_rows(dir / "convergence_spatial.csv", study.spatial);
    Json summary{{"method", integrators::to_string(cfg.method)},
                 {"temporal", rows_json(study.temporal)},
                 {"spatial", rows_json(study.spatial)},
                 {"spatial_floor_estimate", study.spatial_floor_estimate},
                 {"spatial_floor_ok", study.spatial_floor_ok},
                 {"temporal_floor_estimate", study.temporal_floor_estimate},
                 {"temporal_floor_ok", study.temporal_floor_ok},
                 {"config", config_json(cfg)}};
    write_text(dir / "convergence_summary.json", summary.dump(2) + "\n");
  }
  return study;
}

// ---------------------------------------------------------------------------
// verify

VerificationRun run_verification(const VerificationOptions& opts) {
  VerificationRun run;
  run.all_passed = true;
  Json reports = Json::array();
  for (std::size_t n : opts.sizes) {
    const GridPtr grid = Grid1D::make(n);
    verification::Operator op;
    if (opts.flip_laplacian_sign) {
      op = [](const Field& f) { return -1.0 * spectral::discrete_laplacian(f); };
    }
    run.reports.push_back(
        verification::check_dissipativity(opts.dissipativity_samples, grid, opts.seed, op));
    run.reports.push_back(
        verification::check_maximality(opts.maximality_samples, grid, opts.seed));
    run.reports.push_back(verification::check_semigroup(opts.semigroup_samples, grid, opts.seed,
                                                        opts.semigroup_times));
    run.reports.push_back(verification::check_lipschitz(opts.lipschitz_samples, grid, opts.seed,
                                                        opts.lipschitz_levels));
  }
  for (const auto& r : run.reports) {
    run.all_passed = run.all_passed && r.passed;
    reports.push_back(detail::report_to_json(r));
  }
  Json doc{{"seed", opts.seed},
           {"sizes", opts.sizes},
           {"flip_laplacian_sign", opts.flip_laplacian_sign},
           {"all_passed", run.all_passed},
           {"reports", std::move(reports)}};
  run.json = doc.dump(2) + "\n";
  return run;
}

void write_source_table(const SourcePair& S, const std::vector<double>& times,
                        const std::string& path) {
  const auto& grid = *S.grid_ptr();
  csv::Writer out(path);
  out.line("t,x,f,g");
  for (double t : times) {
    const Field f = S.f(t);
    const Field g = S.g(t);
    for (std::size_t j = 0; j <= grid.n_interior() + 1; ++j) {
      out.row({t, grid.x(j), f.at_node(j), g.at_node(j)});
    }
  }
  out.close();
}

}  // namespace pdae::scenario
