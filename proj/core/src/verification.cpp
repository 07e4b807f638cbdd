#include "pdae/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json_io.hpp"
#include "pdae/nonlinearity.hpp"
#include "pdae/spectral.hpp"

namespace pdae::verification {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::mt19937_64 make_rng(std::uint64_t seed, std::size_t n, std::uint32_t check_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), check_id};
  return std::mt19937_64(seq);
}

PropertyReport finish(std::string name, const GridPtr& grid, std::size_t samples,
                      std::uint64_t seed, std::vector<SubCheck> checks) {
  PropertyReport r;
  r.name = std::move(name);
  r.n_interior = grid->n_interior();
  r.samples = samples;
  r.seed = seed;
  r.tolerance = 0.0;
  r.worst_value = -kInf;
  for (auto& c : checks) {
    c.passed = c.worst_value <= c.tolerance;
    r.worst_value = std::max(r.worst_value, c.worst_value - c.tolerance);
  }
  // NaN margins must fail.
  r.passed = r.worst_value <= r.tolerance;
  for (const auto& c : checks) {
    if (std::isnan(c.worst_value)) {
      r.worst_value = kInf;
      r.passed = false;
    }
  }
  r.checks = std::move(checks);
  return r;
}

double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::string format_level(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", c);
  return buf;
}

}  // namespace

const SubCheck& PropertyReport::check(const std::string& wanted) const {
  for (const auto& c : checks) {
    if (c.name == wanted) return c;
  }
  throw std::out_of_range("PropertyReport '" + name + "' has no sub-check '" + wanted + "'");
}

StateU random_state(const GridPtr& grid, std::mt19937_64& rng, double target_norm) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  StateU U(grid);
  for (auto& x : U.u.values()) x = dist(rng);
  for (auto& x : U.v.values()) x = dist(rng);
  const double nrm = norm(U);
  if (nrm > 0.0) U *= target_norm / nrm;
  return U;
}

PropertyReport check_dissipativity(std::size_t n_samples, const GridPtr& grid,
                                   std::uint64_t seed, Operator op) {
  if (n_samples < 1) throw std::invalid_argument("check_dissipativity: n_samples must be >= 1");
  if (!op) op = [](const Field& f) { return spectral::discrete_laplacian(f); };
  auto rng = make_rng(seed, grid->n_interior(), 1);

  SubCheck rayleigh{"rayleigh_quotient", -kInf, 1e-10, false};
  SubCheck sbp{"summation_by_parts_relative_defect", 0.0, 1e-10, false};
  for (std::size_t s = 0; s < n_samples; ++s) {
    const StateU U = random_state(grid, rng, 1.0);
    const double norm2 = inner(U, U);
    const double value = inner(op(U.u), U.u) + inner(op(U.v), U.v);
    rayleigh.worst_value = std::max(rayleigh.worst_value, value / norm2);

    const double hu = nonlinearity::h1_seminorm(U.u);
    const double hv = nonlinearity::h1_seminorm(U.v);
    const double energy = hu * hu + hv * hv;
    sbp.worst_value = std::max(sbp.worst_value, std::abs(value + energy) / energy);
  }
  return finish("dissipativity", grid, n_samples, seed, {rayleigh, sbp});
}

PropertyReport check_maximality(std::size_t n_samples, const GridPtr& grid,
                                std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("check_maximality: n_samples must be >= 1");
  auto rng = make_rng(seed, grid->n_interior(), 2);

  SubCheck residual{"relative_residual_inf", 0.0, 1e-12, false};
  SubCheck unique{"elimination_order_agreement_inf", 0.0, 1e-12, false};
  for (std::size_t s = 0; s < n_samples; ++s) {
    const StateU g = random_state(grid, rng, 1.0);
    for (const Field* gi : {&g.u, &g.v}) {
      const double scale = max_norm(*gi);
      const Field a = spectral::solve_shifted(*gi, 1.0, spectral::Elimination::top_down);
      const Field b = spectral::solve_shifted(*gi, 1.0, spectral::Elimination::bottom_up);
      residual.worst_value = std::max(residual.worst_value,
                                      spectral::shifted_residual(a, *gi, 1.0) / scale);
      unique.worst_value = std::max(unique.worst_value, max_abs_diff(a, b) / scale);
    }
  }
  return finish("maximality", grid, n_samples, seed, {residual, unique});
}

PropertyReport check_semigroup(std::size_t n_samples, const GridPtr& grid,
                               std::uint64_t seed, const std::vector<double>& times) {
  if (n_samples < 1) throw std::invalid_argument("check_semigroup: n_samples must be >= 1");
  for (double t : times) {
    if (!(t >= 0.0)) throw std::invalid_argument("check_semigroup: times must be >= 0");
  }
  auto rng = make_rng(seed, grid->n_interior(), 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SubCheck identity{"identity_at_zero", 0.0, 1e-14, false};
  SubCheck contraction{"contraction_excess", -kInf, 1e-12, false};
  SubCheck law{"semigroup_law_defect", 0.0, 1e-12, false};
  SubCheck continuity{"strong_continuity_max_increase", -kInf, 1e-13, false};
  SubCheck generator{"generator_order_deviation", 0.0, 0.1, false};

  const auto lambda = grid->eigenvalues();
  const double stiff = std::abs(lambda.back());
  // Generator consistency needs t*|lambda_max| << 1 to be in the asymptotic range.
  const double t_gen = 1e-2 / stiff;

  for (std::size_t s = 0; s < n_samples; ++s) {
    const StateU U = random_state(grid, rng, 1.0);

    identity.worst_value =
        std::max(identity.worst_value, norm(spectral::semigroup_apply(U, 0.0) - U));
    for (double t : times) {
      const double excess = norm(spectral::semigroup_apply(U, t)) - 1.0;
      contraction.worst_value = std::max(contraction.worst_value, excess);
    }

    const double t = unit(rng);
    const double r = unit(rng);
    const StateU joint = spectral::semigroup_apply(U, t + r);
    const StateU split = spectral::semigroup_apply(spectral::semigroup_apply(U, r), t);
    law.worst_value = std::max(law.worst_value, norm(joint - split));

    double previous = kInf;
    for (double tc = 1.0; tc >= 5e-7; tc *= 0.5) {
      const double d = norm(spectral::semigroup_apply(U, tc) - U);
      continuity.worst_value = std::max(continuity.worst_value, d - previous);
      previous = d;
    }

    const StateU AU(spectral::discrete_laplacian(U.u), spectral::discrete_laplacian(U.v));
    const double scale = norm(AU);
    double prev_err = 0.0;
    for (int level = 0; level < 4; ++level) {
      const double tl = t_gen / static_cast<double>(1 << level);
      StateU quotient = spectral::semigroup_apply(U, tl) - U;
      quotient *= 1.0 / tl;
      const double err = norm(quotient - AU) / scale;
      if (level > 0) {
        const double order = std::log2(prev_err / err);
        generator.worst_value = std::max(generator.worst_value, std::abs(order - 1.0));
      }
      prev_err = err;
    }
  }
  if (times.empty()) contraction.worst_value = 0.0;
  return finish("semigroup", grid, n_samples, seed,
                {identity, contraction, law, continuity, generator});
}

PropertyReport check_lipschitz(std::size_t n_samples, const GridPtr& grid,
                               std::uint64_t seed, const std::vector<double>& C_levels) {
  if (n_samples < 1) throw std::invalid_argument("check_lipschitz: n_samples must be >= 1");
  const auto sources = nonlinearity::SourcePair::zero(grid);
  auto rng = make_rng(seed, grid->n_interior(), 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<SubCheck> checks;
  for (double C : C_levels) {
    if (!(C > 0.0)) throw std::invalid_argument("check_lipschitz: C levels must be > 0");
    SubCheck sub{"max_ratio_C=" + format_level(C), 0.0, 4.0 * std::sqrt(3.0) * C + 1e-9, false};
    for (std::size_t s = 0; s < n_samples; ++s) {
      // Cycle through independent pairs, near-coincident pairs and pairs
      // anchored at the origin.
      StateU U(grid), V(grid);
      switch (s % 3) {
        case 0:
          U = random_state(grid, rng, C * (1.0 - unit(rng)));
          V = random_state(grid, rng, C * (1.0 - unit(rng)));
          break;
        case 1: {
          const double eps = 1e-3 * C;
          U = random_state(grid, rng, (C - eps) * (1.0 - unit(rng)));
          V = U + random_state(grid, rng, eps * (1.0 - unit(rng)));
          break;
        }
        default:
          V = random_state(grid, rng, C * (1.0 - unit(rng)));
          break;
      }
      sub.worst_value = std::max(sub.worst_value, nonlinearity::lipschitz_ratio(U, V, sources));
    }
    checks.push_back(std::move(sub));
  }
  return finish("lipschitz", grid, n_samples * C_levels.size(), seed, std::move(checks));
}

std::string to_json(const PropertyReport& report, int indent) {
  return detail::report_to_json(report).dump(indent);
}

}  // namespace pdae::verification

namespace pdae::detail {

Json report_to_json(const verification::PropertyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"worst_value", c.worst_value},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
  }
  return Json{{"name", r.name},           {"n_interior", r.n_interior},
              {"samples", r.samples},     {"worst_value", r.worst_value},
              {"tolerance", r.tolerance}, {"passed", r.passed},
              {"seed", r.seed},           {"checks", std::move(checks)}};
}

}  // namespace pdae::detail
