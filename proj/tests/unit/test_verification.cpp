#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "pdae/spectral.hpp"
#include "pdae/verification.hpp"

using namespace pdae;
using namespace pdae::verification;
using testing_support::sine_mode;

namespace {

void expect_report_invariant(const PropertyReport& r) {
  EXPECT_EQ(r.passed, r.worst_value <= r.tolerance) << r.name;
  bool all = true;
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.passed, c.worst_value <= c.tolerance) << r.name << "/" << c.name;
    all = all && c.passed;
  }
  EXPECT_EQ(r.passed, all) << r.name;
}

}  // namespace

TEST(RandomState, HitsTargetNormAndIsSeeded) {
  auto grid = Grid1D::make(30);
  std::mt19937_64 a(42), b(42);
  const StateU U = random_state(grid, a, 2.5);
  const StateU V = random_state(grid, b, 2.5);
  EXPECT_NEAR(norm(U), 2.5, 1e-13);
  EXPECT_EQ(norm(U - V), 0.0);
}

TEST(Dissipativity, ZeroStateHasZeroInner) {
  auto grid = Grid1D::make(16);
  const Field z(grid);
  EXPECT_EQ(inner(spectral::discrete_laplacian(z), z), 0.0);
}

TEST(Dissipativity, SineModeInnerIsEigenvalueTimesMass) {
  auto grid = Grid1D::make(40);
  for (int k : {1, 10, 40}) {
    const Field s = sine_mode(grid, k);
    const double lk = grid->eigenvalues()[static_cast<std::size_t>(k - 1)];
    EXPECT_NEAR(inner(spectral::discrete_laplacian(s), s), lk * inner(s, s),
                1e-12 * std::abs(lk));
    EXPECT_LT(inner(spectral::discrete_laplacian(s), s), 0.0);
  }
}

TEST(Dissipativity, PassesOnRandomStates) {
  for (std::size_t n : {16u, 64u, 256u}) {
    const auto r = check_dissipativity(1000, Grid1D::make(n), 0);
    EXPECT_TRUE(r.passed) << to_json(r);
    EXPECT_LE(r.check("rayleigh_quotient").worst_value, 0.0);
    expect_report_invariant(r);
  }
}

TEST(Dissipativity, FlippedOperatorFails) {
  const auto r = check_dissipativity(
      50, Grid1D::make(16), 0, [](const Field& f) { return -1.0 * spectral::discrete_laplacian(f); });
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.check("rayleigh_quotient").passed);
  expect_report_invariant(r);
}

TEST(Maximality, ZeroRightHandSide) {
  auto grid = Grid1D::make(16);
  EXPECT_EQ(max_norm(spectral::solve_shifted(Field(grid), 1.0)), 0.0);
}

TEST(Maximality, PassesOnRandomRightHandSides) {
  for (std::size_t n : {16u, 64u, 256u}) {
    const auto r = check_maximality(1000, Grid1D::make(n), 0);
    EXPECT_TRUE(r.passed) << to_json(r);
    expect_report_invariant(r);
  }
}

TEST(Semigroup, PassesAtDefaultTimes) {
  const auto r = check_semigroup(100, Grid1D::make(64), 0, {0.0, 0.01, 0.1, 1.0});
  EXPECT_TRUE(r.passed) << to_json(r);
  EXPECT_EQ(r.check("identity_at_zero").worst_value, 0.0);
  EXPECT_LE(r.check("semigroup_law_defect").worst_value, 1e-12);
  expect_report_invariant(r);
}

TEST(Semigroup, SingleModeDifferenceQuotientSlope) {
  // (e^{lambda t} - 1)/t - lambda = lambda^2 t/2 + O(t^2): halving t halves
  // the defect to within 10%.
  auto grid = Grid1D::make(32);
  const double lk = grid->eigenvalues()[2];
  const double t0 = 1e-2 / std::abs(lk);
  double prev = 0.0;
  for (int level = 0; level < 4; ++level) {
    const double t = t0 / (1 << level);
    const StateU U(sine_mode(grid, 3), Field(grid));
    StateU q = spectral::semigroup_apply(U, t) - U;
    q *= 1.0 / t;
    const double defect = std::abs(q.u[5] - lk * U.u[5]);
    if (prev > 0.0) {
      EXPECT_NEAR(prev / defect, 2.0, 0.2);
    }
    prev = defect;
  }
}

TEST(Semigroup, NegativeTimesRejected) {
  EXPECT_THROW(check_semigroup(1, Grid1D::make(8), 0, {0.1, -0.1}), std::invalid_argument);
}

TEST(Lipschitz, BoundAndSharpestRatioRecorded) {
  const auto r = check_lipschitz(10000, Grid1D::make(64), 0, {0.5, 1.0, 5.0});
  EXPECT_TRUE(r.passed) << to_json(r);
  EXPECT_EQ(r.samples, 30000u);
  const double c1 = r.check("max_ratio_C=1").worst_value;
  EXPECT_GT(c1, 0.0);
  EXPECT_LT(c1, 4.0 * std::sqrt(3.0));
  EXPECT_LE(r.check("max_ratio_C=5").worst_value, 20.0 * std::sqrt(3.0));
  expect_report_invariant(r);
}

TEST(Lipschitz, RejectsNonPositiveLevels) {
  EXPECT_THROW(check_lipschitz(10, Grid1D::make(8), 0, {1.0, 0.0}), std::invalid_argument);
}

TEST(Reports, BitReproducibleFromSeed) {
  auto grid = Grid1D::make(16);
  EXPECT_EQ(to_json(check_dissipativity(100, grid, 7)), to_json(check_dissipativity(100, grid, 7)));
  EXPECT_EQ(to_json(check_lipschitz(300, grid, 7, {1.0})),
            to_json(check_lipschitz(300, grid, 7, {1.0})));
  EXPECT_NE(to_json(check_lipschitz(300, grid, 7, {1.0})),
            to_json(check_lipschitz(300, grid, 8, {1.0})));
}

TEST(Reports, JsonCarriesRequiredFields) {
  const auto json = to_json(check_maximality(5, Grid1D::make(8), 3));
  for (const char* key : {"\"name\"", "\"samples\"", "\"worst_value\"", "\"tolerance\"",
                          "\"passed\"", "\"seed\"", "\"checks\""}) {
    EXPECT_NE(json.find(key), std::string::npos) << key;
  }
}

TEST(Reports, ZeroSamplesRejected) {
  auto grid = Grid1D::make(8);
  EXPECT_THROW(check_dissipativity(0, grid, 0), std::invalid_argument);
  EXPECT_THROW(check_maximality(0, grid, 0), std::invalid_argument);
  EXPECT_THROW(check_semigroup(0, grid, 0, {0.1}), std::invalid_argument);
  EXPECT_THROW(check_lipschitz(0, grid, 0, {1.0}), std::invalid_argument);
}
