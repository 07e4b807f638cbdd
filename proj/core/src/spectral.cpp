#include "pdae/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pdae::spectral {

std::vector<double> eigen_spectrum(const Grid1D& grid) {
  const auto lambda = grid.eigenvalues();
  return {lambda.begin(), lambda.end()};
}

void sine_transform(const Grid1D& grid, std::span<const double> in,
                    std::span<double> out, double scale) {
  const std::size_t n = grid.n_interior();
  if (in.size() != n || out.size() != n) {
    throw std::invalid_argument("sine_transform: length mismatch");
  }
  const auto table = grid.sine_table();
  for (std::size_t k = 0; k < n; ++k) {
    const double* row = table.data() + k * n;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += row[j] * in[j];
    out[k] = scale * s;
  }
}

SineCoeffs dst_forward(const Field& f) {
  const std::size_t n = f.grid().n_interior();
  SineCoeffs c{f.grid_ptr(), std::vector<double>(n)};
  sine_transform(f.grid(), f.values(), c.coeffs, 2.0 / static_cast<double>(n + 1));
  return c;
}

Field dst_inverse(const SineCoeffs& c) {
  if (!c.grid) throw std::invalid_argument("dst_inverse: null grid");
  Field f(c.grid);
  sine_transform(*c.grid, c.coeffs, f.values(), 1.0);
  return f;
}

Field discrete_laplacian(const Field& f) {
  const std::size_t n = f.size();
  const double inv_h2 = 1.0 / (f.grid().h() * f.grid().h());
  Field out(f.grid_ptr());
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i == 0 ? 0.0 : f[i - 1];
    const double right = i + 1 == n ? 0.0 : f[i + 1];
    out[i] = (left - 2.0 * f[i] + right) * inv_h2;
  }
  return out;
}

namespace {

template <class Weight>
Field scale_modes(const Field& f, Weight&& weight) {
  SineCoeffs c = dst_forward(f);
  const auto lambda = f.grid().eigenvalues();
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) c.coeffs[k] *= weight(lambda[k]);
  return dst_inverse(c);
}

}  // namespace

Field semigroup_apply(const Field& f, double t, double diffusion) {
  if (t < 0.0 || std::isnan(t)) {
    throw std::domain_error("semigroup_apply: t must be >= 0, got " + std::to_string(t));
  }
  if (t == 0.0) return f;
  return scale_modes(f, [&](double lam) { return std::exp(diffusion * lam * t); });
}

StateU semigroup_apply(const StateU& U, double t, Diffusion d) {
  return {semigroup_apply(U.u, t, d.d_u), semigroup_apply(U.v, t, d.d_v)};
}

double phi1(double z) noexcept {
  if (std::abs(z) < 1e-6) return 1.0 + z / 2.0 + z * z / 6.0;
  return std::expm1(z) / z;
}

StateU phi1_apply(const StateU& U, double t, Diffusion d) {
  if (!(t > 0.0)) {
    throw std::domain_error("phi1_apply: t must be > 0, got " + std::to_string(t));
  }
  auto u = scale_modes(U.u, [&](double lam) { return phi1(d.d_u * lam * t); });
  auto v = scale_modes(U.v, [&](double lam) { return phi1(d.d_v * lam * t); });
  return {std::move(u), std::move(v)};
}

namespace {

// Thomas elimination for (a*h^2) u_j - u_{j-1} - u_{j+1} = h^2 g_j with
// a = lambda + 2/h^2, carried out in extended precision.
void thomas(std::span<const double> g, double lambda, double h, std::span<double> out) {
  const std::size_t n = g.size();
  const long double h2 = static_cast<long double>(h) * h;
  const long double diag = static_cast<long double>(lambda) * h2 + 2.0L;
  std::vector<long double> c(n), d(n);
  long double m = diag;
  c[0] = -1.0L / m;
  d[0] = h2 * g[0] / m;
  for (std::size_t i = 1; i < n; ++i) {
    m = diag + c[i - 1];
    c[i] = -1.0L / m;
    d[i] = (h2 * g[i] + d[i - 1]) / m;
  }
  long double x = d[n - 1];
  out[n - 1] = static_cast<double>(x);
  for (std::size_t i = n - 1; i-- > 0;) {
    x = d[i] - c[i] * x;
    out[i] = static_cast<double>(x);
  }
}

}  // namespace

Field solve_shifted(const Field& g, double lambda, Elimination order) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("solve_shifted: lambda must be > 0, got " +
                            std::to_string(lambda));
  }
  Field u(g.grid_ptr());
  const double h = g.grid().h();
  if (order == Elimination::top_down) {
    thomas(g.values(), lambda, h, u.values());
  } else {
    std::vector<double> rg(g.values().rbegin(), g.values().rend());
    std::vector<double> ru(rg.size());
    thomas(rg, lambda, h, ru);
    std::reverse_copy(ru.begin(), ru.end(), u.values().begin());
  }
  return u;
}

double shifted_residual(const Field& u, const Field& g, double lambda) {
  require_same_grid(u, g, "shifted_residual");
  const std::size_t n = u.size();
  const long double h = u.grid().h();
  const long double inv_h2 = 1.0L / (h * h);
  const long double diag = lambda + 2.0L * inv_h2;
  long double worst = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const long double left = i == 0 ? 0.0L : u[i - 1];
    const long double right = i + 1 == n ? 0.0L : u[i + 1];
    const long double r = diag * u[i] - (left + right) * inv_h2 - g[i];
    worst = std::max(worst, std::abs(r));
  }
  return static_cast<double>(worst);
}

}  // namespace pdae::spectral
