#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pdae/spectral.hpp"

using namespace pdae;
using namespace pdae::spectral;
using testing_support::max_abs;
using testing_support::max_abs_diff;
using testing_support::random_field;
using testing_support::sine_mode;
using testing_support::to_vec;

TEST(DstForward, ZeroFieldGivesZeroCoefficients) {
  auto grid = Grid1D::make(12);
  const auto c = dst_forward(Field(grid));
  for (double x : c.coeffs) EXPECT_EQ(x, 0.0);
}

TEST(DstForward, FirstSineModeIsUnitVector) {
  auto grid = Grid1D::make(7);
  const auto c = dst_forward(sine_mode(grid, 1));
  // Projection oracle sum_j f_j s_k(x_j) / sum_j s_k(x_j)^2.
  for (std::size_t k = 1; k <= 7; ++k) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 1; j <= 7; ++j) {
      const double s = std::sin(static_cast<double>(k * j) * std::numbers::pi / 8.0);
      num += std::sin(static_cast<double>(j) * std::numbers::pi / 8.0) * s;
      den += s * s;
    }
    EXPECT_NEAR(c.coeffs[k - 1], num / den, 1e-14);
    EXPECT_NEAR(c.coeffs[k - 1], k == 1 ? 1.0 : 0.0, 1e-14);
  }
}

TEST(DstInverse, UnitCoefficientGivesSineMode) {
  auto grid = Grid1D::make(7);
  SineCoeffs c{grid, std::vector<double>(7, 0.0)};
  EXPECT_EQ(max_norm(dst_inverse(c)), 0.0);
  c.coeffs[0] = 1.0;
  EXPECT_LT(max_abs_diff(to_vec(dst_inverse(c)), to_vec(sine_mode(grid, 1))), 1e-15);
}

TEST(Dst, RoundTripsToTwelveDigits) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 2u, 16u, 100u, 257u}) {
    auto grid = Grid1D::make(n);
    const Field f = random_field(grid, rng);
    const Field back = dst_inverse(dst_forward(f));
    EXPECT_LE(max_abs_diff(to_vec(back), to_vec(f)), 1e-12 * max_norm(f)) << "n = " << n;

    SineCoeffs c{grid, to_vec(random_field(grid, rng))};
    const auto c2 = dst_forward(dst_inverse(c));
    EXPECT_LE(max_abs_diff(c2.coeffs, c.coeffs), 1e-12 * max_abs(c.coeffs)) << "n = " << n;
  }
}

TEST(Dst, ParsevalWithTwoOverNPlusOneWeight) {
  std::mt19937_64 rng(11);
  auto grid = Grid1D::make(40);
  const Field f = random_field(grid, rng);
  double sum_c2 = 0.0;
  for (double c : dst_forward(f).coeffs) sum_c2 += c * c;
  EXPECT_NEAR(l2_norm(f) * l2_norm(f), sum_c2 / 2.0, 1e-13);
}

TEST(DiscreteLaplacian, ZeroStaysZero) {
  auto grid = Grid1D::make(5);
  EXPECT_EQ(max_norm(discrete_laplacian(Field(grid))), 0.0);
}

TEST(DiscreteLaplacian, MatchesDenseMatrix) {
  std::mt19937_64 rng(3);
  auto grid = Grid1D::make(13);
  const Field f = random_field(grid, rng);
  const auto dense = oracle::dense_laplacian(13) * to_vec(f);
  EXPECT_LT(max_abs_diff(to_vec(discrete_laplacian(f)), dense), 1e-10);
}

TEST(DiscreteLaplacian, QuadraticHasSecondDifferenceMinusTwo) {
  auto grid = Grid1D::make(20);
  const Field f = Field::sample(grid, [](double x) { return x * (1.0 - x); });
  const Field L = discrete_laplacian(f);
  for (std::size_t i = 0; i < L.size(); ++i) EXPECT_NEAR(L[i], -2.0, 1e-10);
}

TEST(DiscreteLaplacian, EigenIdentityForEveryMode) {
  // Cancellation in the second difference grows with n; at n = 64 every
  // mode stays inside 1e-12 relative.
  for (std::size_t n : {8u, 31u, 64u}) {
    auto grid = Grid1D::make(n);
    const auto lambda = eigen_spectrum(*grid);
    for (std::size_t k = 1; k <= n; ++k) {
      const Field s = sine_mode(grid, static_cast<int>(k));
      const Field L = discrete_laplacian(s);
      double err = 0.0;
      for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(L[i] - lambda[k - 1] * s[i]));
      EXPECT_LE(err, 1e-12 * std::abs(lambda[k - 1])) << "n = " << n << ", k = " << k;
    }
  }
}

TEST(SemigroupApply, IdentityAtZero) {
  std::mt19937_64 rng(5);
  auto grid = Grid1D::make(16);
  const StateU U(random_field(grid, rng), random_field(grid, rng));
  const StateU S0 = semigroup_apply(U, 0.0);
  EXPECT_EQ(norm(S0 - U), 0.0);
}

TEST(SemigroupApply, NegativeTimeThrows) {
  auto grid = Grid1D::make(4);
  EXPECT_THROW(semigroup_apply(StateU(grid), -1e-3), std::domain_error);
  EXPECT_THROW(semigroup_apply(StateU(grid), std::nan("")), std::domain_error);
}

TEST(SemigroupApply, FirstModeDecaysByExpLambdaT) {
  auto grid = Grid1D::make(16);
  const StateU U(sine_mode(grid, 1), Field(grid));
  const StateU out = semigroup_apply(U, 0.1);
  const double factor = std::exp(0.1 * grid->eigenvalues()[0]);
  const auto dense = oracle::expm(oracle::dense_laplacian(16), 0.1) * to_vec(U.u);
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_NEAR(out.u[i], factor * U.u[i], 1e-14);
    EXPECT_NEAR(out.u[i], dense[i], 1e-12);
  }
  EXPECT_EQ(max_norm(out.v), 0.0);
}

TEST(SemigroupApply, MatchesDenseExponentialOnRandomState) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {4u, 9u, 16u}) {
    auto grid = Grid1D::make(n);
    const StateU U(random_field(grid, rng), random_field(grid, rng));
    const Diffusion d{0.7, 1.3};
    const StateU out = semigroup_apply(U, 0.05, d);
    const auto Eu = oracle::expm(oracle::dense_laplacian(n, d.d_u), 0.05);
    const auto Ev = oracle::expm(oracle::dense_laplacian(n, d.d_v), 0.05);
    EXPECT_LT(max_abs_diff(to_vec(out.u), Eu * to_vec(U.u)), 1e-10);
    EXPECT_LT(max_abs_diff(to_vec(out.v), Ev * to_vec(U.v)), 1e-10);
  }
}

TEST(SemigroupApply, ContractsForRandomStates) {
  std::mt19937_64 rng(13);
  auto grid = Grid1D::make(64);
  for (int s = 0; s < 1000; ++s) {
    const StateU U(random_field(grid, rng), random_field(grid, rng));
    for (double t : {0.01, 0.1, 1.0}) {
      ASSERT_LE(norm(semigroup_apply(U, t)), norm(U) + 1e-12);
    }
  }
}

TEST(SemigroupApply, SemigroupLaw) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto grid = Grid1D::make(64);
  for (int s = 0; s < 200; ++s) {
    const StateU U(random_field(grid, rng), random_field(grid, rng));
    const double t = unit(rng), r = unit(rng);
    const StateU joint = semigroup_apply(U, t + r);
    const StateU split = semigroup_apply(semigroup_apply(U, r), t);
    ASSERT_LE(norm(joint - split), 1e-12 * norm(U));
  }
}

TEST(Phi1, SeriesBranchAndGeneralBranchAgree) {
  EXPECT_EQ(phi1(0.0), 1.0);
  EXPECT_NEAR(phi1(1e-7), 1.0 + 0.5e-7 + 1e-14 / 6.0, 1e-15);
  EXPECT_NEAR(phi1(-1.0), 0.6321205588285577, 1e-15);
  // Both branches agree with the Taylor series on either side of the switch.
  for (double z : {0.99e-6, 1.01e-6, -0.99e-6, -1.01e-6}) {
    EXPECT_NEAR(phi1(z), 1.0 + z / 2.0 + z * z / 6.0, 1e-15) << z;
  }
  EXPECT_NEAR(phi1(-50.0), 1.0 / 50.0, 1e-15);
}

TEST(Phi1Apply, SmallArgumentApproachesIdentity) {
  auto grid = Grid1D::make(8);
  const StateU U(sine_mode(grid, 1), sine_mode(grid, 2));
  const StateU out = phi1_apply(U, 1e-12);
  EXPECT_LT(norm(out - U), 1e-9);
}

TEST(Phi1Apply, FirstModeAtZEqualsMinusOne) {
  auto grid = Grid1D::make(10);
  const double t = -1.0 / grid->eigenvalues()[0];
  const StateU out = phi1_apply(StateU(sine_mode(grid, 1), Field(grid)), t);
  const Field s = sine_mode(grid, 1);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(out.u[i], 0.6321205588 * s[i], 1e-10);
}

TEST(Phi1Apply, MatchesDenseOracle) {
  std::mt19937_64 rng(21);
  for (std::size_t n : {5u, 12u}) {
    auto grid = Grid1D::make(n);
    const StateU U(random_field(grid, rng), random_field(grid, rng));
    const StateU out = phi1_apply(U, 0.01);
    const auto A = oracle::dense_laplacian(n);
    EXPECT_LT(max_abs_diff(to_vec(out.u), oracle::phi1_apply(A, 0.01, to_vec(U.u))), 1e-10);
    EXPECT_LT(max_abs_diff(to_vec(out.v), oracle::phi1_apply(A, 0.01, to_vec(U.v))), 1e-10);
  }
}

TEST(Phi1Apply, NonPositiveTimeThrows) {
  auto grid = Grid1D::make(4);
  EXPECT_THROW(phi1_apply(StateU(grid), 0.0), std::domain_error);
  EXPECT_THROW(phi1_apply(StateU(grid), -1.0), std::domain_error);
}

TEST(SolveShifted, ZeroRightHandSide) {
  auto grid = Grid1D::make(6);
  EXPECT_EQ(max_norm(solve_shifted(Field(grid), 1.0)), 0.0);
}

TEST(SolveShifted, SineModeDividesByShiftedEigenvalue) {
  auto grid = Grid1D::make(24);
  for (int k : {1, 7, 24}) {
    const Field g = sine_mode(grid, k);
    for (double lambda : {1.0, 0.25, 1e3}) {
      const Field u = solve_shifted(g, lambda);
      const double denom = lambda - grid->eigenvalues()[static_cast<std::size_t>(k - 1)];
      for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(u[i], g[i] / denom, 1e-14);
    }
  }
}

TEST(SolveShifted, MatchesDenseSolve) {
  std::mt19937_64 rng(23);
  auto grid = Grid1D::make(8);
  const Field g = random_field(grid, rng);
  oracle::Matrix M = oracle::dense_laplacian(8);
  for (auto& x : M.a) x = -x;
  for (std::size_t i = 0; i < 8; ++i) M(i, i) += 1.0;
  const auto dense = oracle::solve(M, to_vec(g));
  for (auto order : {Elimination::top_down, Elimination::bottom_up}) {
    EXPECT_LT(max_abs_diff(to_vec(solve_shifted(g, 1.0, order)), dense), 1e-12);
  }
}

TEST(SolveShifted, ResidualAtLargeGrid) {
  std::mt19937_64 rng(29);
  auto grid = Grid1D::make(256);
  for (int s = 0; s < 50; ++s) {
    const Field g = random_field(grid, rng);
    const Field u = solve_shifted(g, 1.0);
    ASSERT_LE(shifted_residual(u, g, 1.0), 1e-12 * max_norm(g));
  }
}

TEST(SolveShifted, NonPositiveShiftThrows) {
  auto grid = Grid1D::make(4);
  EXPECT_THROW(solve_shifted(Field(grid), 0.0), std::domain_error);
  EXPECT_THROW(solve_shifted(Field(grid), -2.0), std::domain_error);
}

TEST(SolveShifted, CommutesWithSemigroup) {
  std::mt19937_64 rng(31);
  auto grid = Grid1D::make(48);
  for (int s = 0; s < 20; ++s) {
    const Field g = random_field(grid, rng);
    const Field a = solve_shifted(semigroup_apply(g, 0.01), 1.0);
    const Field b = semigroup_apply(solve_shifted(g, 1.0), 0.01);
    ASSERT_LT(max_abs_diff(to_vec(a), to_vec(b)), 1e-10);
  }
}
