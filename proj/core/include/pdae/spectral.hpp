#pragma once

#include <span>
#include <vector>

#include "pdae/field.hpp"

namespace pdae::spectral {

/// Per-component diffusion coefficients; the generator acting on (u, v) is
/// (d_u * A_h u, d_v * A_h v).
struct Diffusion {
  double d_u = 1.0;
  double d_v = 1.0;
};

/// Exact eigenvalues of the second-difference Dirichlet matrix,
/// lambda_k = -(4/h^2) sin^2(k*pi*h/2), k = 1..n.
std::vector<double> eigen_spectrum(const Grid1D& grid);

/// coeffs_k = 2/(n+1) * sum_j f_j sin(k*pi*x_j).
SineCoeffs dst_forward(const Field& f);
/// values_j = sum_k coeffs_k sin(k*pi*x_j).
Field dst_inverse(const SineCoeffs& c);

/// (f_{j-1} - 2 f_j + f_{j+1}) / h^2 with zero Dirichlet boundary values.
Field discrete_laplacian(const Field& f);

/// S(t)U = exp(t*A_h)U, evaluated mode by mode in the sine basis.
/// Throws std::domain_error for t < 0.
StateU semigroup_apply(const StateU& U, double t, Diffusion d = {});
Field semigroup_apply(const Field& f, double t, double diffusion = 1.0);

/// phi1(z) = (e^z - 1)/z, with the series 1 + z/2 + z^2/6 for |z| < 1e-6.
double phi1(double z) noexcept;

/// phi1(t*A_h)U. Throws std::domain_error for t <= 0.
StateU phi1_apply(const StateU& U, double t, Diffusion d = {});

enum class Elimination {
  top_down,   ///< forward sweep from node 1, back substitution from node n
  bottom_up,  ///< the same system eliminated from node n towards node 1
};

/// Solves (lambda*I - A_h) u = g by tridiagonal elimination.
/// Throws std::domain_error for lambda <= 0.
Field solve_shifted(const Field& g, double lambda,
                    Elimination order = Elimination::top_down);

/// Max-norm of (lambda*I - A_h) u - g, accumulated in extended precision.
double shifted_residual(const Field& u, const Field& g, double lambda);

/// out = scale * T in, with T the grid's symmetric sine table. With
/// scale = 2/(n+1) this is dst_forward, with scale = 1 dst_inverse.
void sine_transform(const Grid1D& grid, std::span<const double> in,
                    std::span<double> out, double scale);

}  // namespace pdae::spectral
