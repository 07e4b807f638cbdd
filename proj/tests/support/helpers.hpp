#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pdae/field.hpp"

namespace testing_support {

/// Nodal values sin(k pi x_j).
inline pdae::Field sine_mode(const pdae::GridPtr& grid, int k) {
  return pdae::Field::sample(grid, [k](double x) { return std::sin(k * std::numbers::pi * x); });
}

inline std::vector<double> to_vec(const pdae::Field& f) {
  return {f.values().begin(), f.values().end()};
}

inline std::vector<double> stack(const pdae::StateU& U) {
  std::vector<double> y = to_vec(U.u);
  y.insert(y.end(), U.v.values().begin(), U.v.values().end());
  return y;
}

inline pdae::StateU unstack(const pdae::GridPtr& grid, const std::vector<double>& y) {
  const std::size_t n = grid->n_interior();
  return {pdae::Field(grid, {y.begin(), y.begin() + static_cast<long>(n)}),
          pdae::Field(grid, {y.begin() + static_cast<long>(n), y.end()})};
}

inline pdae::Field random_field(const pdae::GridPtr& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  pdae::Field f(grid);
  for (auto& x : f.values()) x = dist(rng);
  return f;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace testing_support
