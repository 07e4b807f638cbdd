#include "pdae/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdae/spectral.hpp"

namespace pdae::integrators {

std::string to_string(Method m) {
  switch (m) {
    case Method::exp_euler: return "exp_euler";
    case Method::picard: return "picard";
    case Method::imex: return "imex";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "exp_euler") return Method::exp_euler;
  if (name == "picard") return Method::picard;
  if (name == "imex") return Method::imex;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected exp_euler, picard or imex)");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::completed: return "completed";
    case Status::blowup_detected: return "blowup_detected";
    case Status::step_failure: return "step_failure";
  }
  return "unknown";
}

void SolveConfig::validate() const {
  const auto fail = [](const std::string& what) {
    throw std::invalid_argument("SolveConfig: " + what);
  };
  if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be finite and > 0");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) fail("t_end must be finite and > 0");
  if (dt > t_end) fail("dt must not exceed t_end");
  if (picard_max_iter < 1) fail("picard_max_iter must be >= 1");
  if (!(picard_tol > 0.0)) fail("picard_tol must be > 0");
  if (picard_substeps < 2) fail("picard_substeps must be >= 2");
  if (!(blowup_threshold > 0.0)) fail("blowup_threshold must be > 0");
  if (snapshot_every < 1) fail("snapshot_every must be >= 1");
}

StepFailure::StepFailure(double t, const std::string& reason,
                         std::optional<double> contraction)
    : std::runtime_error("step failure at t = " + std::to_string(t) + ": " + reason),
      t_(t),
      reason_(reason),
      contraction_(contraction) {}

namespace {

std::vector<double> forward(const Field& f) { return spectral::dst_forward(f).coeffs; }

Field inverse(const GridPtr& grid, std::vector<double> c) {
  return spectral::dst_inverse(SineCoeffs{grid, std::move(c)});
}

void require_finite(const StateU& U, double tn, const char* method) {
  if (!U.all_finite()) {
    throw StepFailure(tn, std::string(method) + " produced a non-finite state");
  }
}

// Per-component generator eigenvalues d * lambda_k.
std::vector<double> scaled_spectrum(const Grid1D& grid, double d) {
  const auto lambda = grid.eigenvalues();
  std::vector<double> out(lambda.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = d * lambda[k];
  return out;
}

Field exp_euler_component(const Field& x, const Field& fx, double dt, double d) {
  auto cx = forward(x);
  const auto cf = forward(fx);
  const auto a = scaled_spectrum(x.grid(), d);
  for (std::size_t k = 0; k < cx.size(); ++k) {
    const double z = a[k] * dt;
    cx[k] = std::exp(z) * cx[k] + dt * spectral::phi1(z) * cf[k];
  }
  return inverse(x.grid_ptr(), std::move(cx));
}

}  // namespace

StateU step_exp_euler(const StateU& Un, double tn, double dt, const SourcePair& S,
                      const CoefficientSet& C) {
  if (!(dt > 0.0)) throw std::domain_error("step_exp_euler: dt must be > 0");
  const StateU F = nonlinearity::eval_F(Un, tn, S, C);
  StateU next(exp_euler_component(Un.u, F.u, dt, C.d_u),
              exp_euler_component(Un.v, F.v, dt, C.d_v));
  require_finite(next, tn, "exp_euler");
  return next;
}

namespace {

// Coefficient-space data of one component over a Picard slab.
struct SlabComponent {
  std::vector<double> c0;               // sine coefficients of U_n
  std::vector<double> f0;               // sine coefficients of F(U_n, t_n)
  std::vector<std::vector<double>> E;   // E[r][k] = exp(d lambda_k r delta)
};

SlabComponent prepare(const Field& x, const Field& fx, double d, double delta, int m) {
  SlabComponent s{forward(x), forward(fx), {}};
  const auto a = scaled_spectrum(x.grid(), d);
  s.E.assign(static_cast<std::size_t>(m) + 1, std::vector<double>(a.size()));
  for (int r = 0; r <= m; ++r) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      s.E[static_cast<std::size_t>(r)][k] = std::exp(a[k] * r * delta);
    }
  }
  return s;
}

Field predictor(const SlabComponent& s, const GridPtr& grid, double d, double tau) {
  const auto lambda = grid->eigenvalues();
  std::vector<double> c(s.c0.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double z = d * lambda[k] * tau;
    c[k] = std::exp(z) * s.c0[k] + tau * spectral::phi1(z) * s.f0[k];
  }
  return inverse(grid, std::move(c));
}

// Trapezoid approximation of S(tau_i) U_n + int_0^tau_i S(tau_i - s) F ds on
// samples s_q = q*delta, q = 0..i, given coefficients Fq of the sampled F.
Field corrector(const SlabComponent& s, const std::vector<std::vector<double>>& Fq,
                const GridPtr& grid, int i, double delta) {
  const auto ui = static_cast<std::size_t>(i);
  std::vector<double> c(s.c0.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    double quad = 0.5 * s.E[ui][k] * s.f0[k] + 0.5 * Fq[ui][k];
    for (std::size_t q = 1; q < ui; ++q) quad += s.E[ui - q][k] * Fq[q][k];
    c[k] = s.E[ui][k] * s.c0[k] + delta * quad;
  }
  return inverse(grid, std::move(c));
}

}  // namespace

PicardResult picard_slab(const StateU& Un, double tn, double dt, const SolveConfig& cfg,
                         const SourcePair& S, const CoefficientSet& C) {
  if (!(dt > 0.0)) throw std::domain_error("picard_slab: dt must be > 0");
  if (cfg.picard_substeps < 2) throw std::invalid_argument("picard_slab: picard_substeps must be >= 2");
  if (cfg.picard_max_iter < 1) throw std::invalid_argument("picard_slab: picard_max_iter must be >= 1");

  const int m = cfg.picard_substeps;
  const auto um = static_cast<std::size_t>(m);
  const double delta = dt / m;
  const GridPtr& grid = Un.grid_ptr();

  const StateU F0 = nonlinearity::eval_F(Un, tn, S, C);
  const SlabComponent su = prepare(Un.u, F0.u, C.d_u, delta, m);
  const SlabComponent sv = prepare(Un.v, F0.v, C.d_v, delta, m);

  // samples[q] approximates U(tn + q*delta); samples[0] = U_n throughout.
  std::vector<StateU> samples;
  samples.reserve(um + 1);
  samples.push_back(Un);
  for (int i = 1; i <= m; ++i) {
    samples.emplace_back(predictor(su, grid, C.d_u, i * delta),
                         predictor(sv, grid, C.d_v, i * delta));
  }

  const double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, norm(Un));
  PicardResult result{Un, 0, 0.0, {}};
  std::vector<std::vector<double>> Fu(um + 1), Fv(um + 1);
  for (int iter = 1; iter <= cfg.picard_max_iter; ++iter) {
    for (std::size_t q = 1; q <= um; ++q) {
      const StateU Fq = nonlinearity::eval_F(samples[q], tn + static_cast<double>(q) * delta, S, C);
      Fu[q] = forward(Fq.u);
      Fv[q] = forward(Fq.v);
    }
    double update = 0.0;
    for (int i = 1; i <= m; ++i) {
      StateU next(corrector(su, Fu, grid, i, delta), corrector(sv, Fv, grid, i, delta));
      auto& current = samples[static_cast<std::size_t>(i)];
      const double change = norm(next - current);
      if (!std::isfinite(change)) throw StepFailure(tn, "picard iterate became non-finite");
      update = std::max(update, change);
      current = std::move(next);
    }
    if (!result.updates.empty() && result.updates.back() > floor && update > floor) {
      result.contraction = std::max(result.contraction, update / result.updates.back());
    }
    result.updates.push_back(update);
    result.iterations = iter;
    if (update < cfg.picard_tol) {
      result.state = samples.back();
      require_finite(result.state, tn, "picard");
      return result;
    }
  }
  throw StepFailure(tn,
                    "picard did not reach tol " + std::to_string(cfg.picard_tol) + " in " +
                        std::to_string(cfg.picard_max_iter) + " iterations (last update " +
                        std::to_string(result.updates.back()) + ", contraction " +
                        std::to_string(result.contraction) + ")",
                    result.contraction);
}

StateU step_imex(const StateU& Un, double tn, double dt, const SourcePair& S,
                 const CoefficientSet& C) {
  if (!(dt > 0.0)) throw std::domain_error("step_imex: dt must be > 0");
  const StateU F = nonlinearity::eval_F(Un, tn, S, C);
  const auto implicit = [dt](const Field& x, const Field& fx, double d) {
    const double lambda = 1.0 / (dt * d);
    Field rhs = x + dt * fx;
    rhs *= lambda;
    return spectral::solve_shifted(rhs, lambda);
  };
  StateU next(implicit(Un.u, F.u, C.d_u), implicit(Un.v, F.v, C.d_v));
  require_finite(next, tn, "imex");
  return next;
}

namespace {

void take_snapshot(Trajectory& traj, double t, const StateU& U, const CoefficientSet& C) {
  Field w = constraint::reconstruct_w(U, C.p_u, C.p_v);
  traj.reports.push_back(constraint::constraint_residual(U, w, C.p_u, C.p_v));
  traj.times.push_back(t);
  traj.states.push_back(U);
  traj.w_fields.push_back(std::move(w));
}

}  // namespace

Trajectory solve(const StateU& U0, const SolveConfig& cfg, const SourcePair& S,
                 const CoefficientSet& C) {
  cfg.validate();
  C.validate();
  if (!(U0.grid() == *S.grid_ptr())) {
    throw GridMismatch("solve: initial state and sources live on different grids");
  }
  if (!U0.all_finite()) throw std::invalid_argument("solve: initial state is not finite");

  Trajectory traj;
  StateU U = U0;
  double current_norm = norm(U);
  traj.norm_history.push_back(current_norm);
  take_snapshot(traj, 0.0, U, C);
  if (current_norm >= cfg.blowup_threshold) {
    traj.termination = {Status::blowup_detected, 0.0,
                        "initial norm at or above blowup_threshold"};
    return traj;
  }

  const auto n_steps = static_cast<std::size_t>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  double t_last = 0.0;
  for (std::size_t n = 0; n < n_steps; ++n) {
    const double tn = static_cast<double>(n) * cfg.dt;
    const bool last = n + 1 == n_steps;
    const double t_next = last ? cfg.t_end : static_cast<double>(n + 1) * cfg.dt;
    const double h = t_next - tn;

    StateU next(U.grid_ptr());
    try {
      switch (cfg.method) {
        case Method::exp_euler:
          next = step_exp_euler(U, tn, h, S, C);
          break;
        case Method::imex:
          next = step_imex(U, tn, h, S, C);
          break;
        case Method::picard: {
          PicardResult r = picard_slab(U, tn, h, cfg, S, C);
          traj.picard_iterations += static_cast<std::size_t>(r.iterations);
          traj.max_picard_contraction = std::max(traj.max_picard_contraction, r.contraction);
          next = std::move(r.state);
          break;
        }
      }
    } catch (const StepFailure& e) {
      if (traj.times.back() != t_last) take_snapshot(traj, t_last, U, C);
      traj.termination = {Status::step_failure, e.t(), e.reason()};
      return traj;
    }

    const double next_norm = norm(next);
    traj.max_norm_rate = std::max(traj.max_norm_rate, std::abs(next_norm - current_norm) / h);
    traj.norm_history.push_back(next_norm);
    ++traj.steps;
    U = std::move(next);
    current_norm = next_norm;
    t_last = t_next;

    if (current_norm >= cfg.blowup_threshold) {
      take_snapshot(traj, t_next, U, C);
      traj.termination = {Status::blowup_detected, t_next,
                          "||U|| = " + std::to_string(current_norm) +
                              " reached blowup_threshold " +
                              std::to_string(cfg.blowup_threshold)};
      return traj;
    }
    if (last || (n + 1) % static_cast<std::size_t>(cfg.snapshot_every) == 0) {
      take_snapshot(traj, t_next, U, C);
    }
  }
  traj.termination = {Status::completed, t_last, ""};
  return traj;
}

}  // namespace pdae::integrators
