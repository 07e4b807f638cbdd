#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <stdexcept>

#include "pdae/csv.hpp"
#include "pdae/nonlinearity.hpp"

namespace pdae::nonlinearity {

std::string to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::zero: return "zero";
    case SourceKind::mms: return "mms";
    case SourceKind::custom_tabulated: return "custom-tabulated";
  }
  return "unknown";
}

SourcePair::SourcePair(GridPtr grid, SourceKind kind, Generator f, Generator g)
    : grid_(std::move(grid)), kind_(kind), f_(std::move(f)), g_(std::move(g)) {
  if (!grid_) throw std::invalid_argument("SourcePair: null grid");
  if (!f_ || !g_) throw std::invalid_argument("SourcePair: empty generator");
}

SourcePair SourcePair::zero(GridPtr grid) {
  auto gen = [grid](double) { return Field(grid); };
  return {grid, SourceKind::zero, gen, gen};
}

Field SourcePair::f(double t) const { return f_(t); }
Field SourcePair::g(double t) const { return g_(t); }

namespace {

struct Slice {
  double t;
  std::vector<double> f;
  std::vector<double> g;
};

// Immutable after load; shared by the two generators.
struct Tabulated {
  GridPtr grid;
  std::vector<Slice> slices;

  Field interpolate(double t, bool want_f) const {
    const auto pick = [&](const Slice& s) -> const std::vector<double>& {
      return want_f ? s.f : s.g;
    };
    if (t <= slices.front().t) return Field(grid, pick(slices.front()));
    if (t >= slices.back().t) return Field(grid, pick(slices.back()));
    const auto hi = std::upper_bound(slices.begin(), slices.end(), t,
                                     [](double v, const Slice& s) { return v < s.t; });
    const auto lo = hi - 1;
    const double w = (t - lo->t) / (hi->t - lo->t);
    const auto& a = pick(*lo);
    const auto& b = pick(*hi);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - w) * a[i] + w * b[i];
    return Field(grid, std::move(out));
  }
};

}  // namespace

SourcePair load_tabulated_sources(const std::string& path, GridPtr grid) {
  const csv::Table table = csv::read(path);
  const std::size_t ct = table.column("t");
  const std::size_t cx = table.column("x");
  const std::size_t cf = table.column("f");
  const std::size_t cg = table.column("g");

  const std::size_t n = grid->n_interior();
  const double h = grid->h();
  constexpr double kAlignTol = 1e-9;

  std::map<double, Slice> by_time;
  std::map<double, std::vector<bool>> seen;
  for (const auto& row : table.rows) {
    const double t = row[ct];
    const double x = row[cx];
    if (!std::isfinite(t) || !std::isfinite(row[cf]) || !std::isfinite(row[cg])) {
      throw std::runtime_error("sources '" + path + "': non-finite entry");
    }
    const double pos = x / h;
    const double j_real = std::round(pos);
    if (std::abs(x - j_real * h) > kAlignTol || j_real < 0.0 ||
        j_real > static_cast<double>(n + 1)) {
      throw std::runtime_error("sources '" + path + "': x = " + csv::format(x) +
                               " is not a node of the grid with n_interior = " +
                               std::to_string(n));
    }
    const auto j = static_cast<std::size_t>(j_real);
    if (j == 0 || j == n + 1) continue;
    auto& slice = by_time[t];
    auto& mask = seen[t];
    if (slice.f.empty()) {
      slice.t = t;
      slice.f.assign(n, 0.0);
      slice.g.assign(n, 0.0);
      mask.assign(n, false);
    }
    if (mask[j - 1]) {
      throw std::runtime_error("sources '" + path + "': duplicate node x = " +
                               csv::format(x) + " at t = " + csv::format(t));
    }
    mask[j - 1] = true;
    slice.f[j - 1] = row[cf];
    slice.g[j - 1] = row[cg];
  }
  if (by_time.empty()) throw std::runtime_error("sources '" + path + "': no rows");

  auto tab = std::make_shared<Tabulated>();
  tab->grid = grid;
  for (auto& [t, slice] : by_time) {
    const auto& mask = seen[t];
    if (std::find(mask.begin(), mask.end(), false) != mask.end()) {
      throw std::runtime_error("sources '" + path + "': time slice t = " +
                               csv::format(t) + " does not cover every interior node");
    }
    tab->slices.push_back(std::move(slice));
  }

  return {grid, SourceKind::custom_tabulated,
          [tab](double t) { return tab->interpolate(t, true); },
          [tab](double t) { return tab->interpolate(t, false); }};
}

}  // namespace pdae::nonlinearity
