#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace pdae {

/// Uniform grid on [0, 1] with homogeneous Dirichlet structure.
///
/// Nodes are x_j = j*h for j = 0..n+1 with h = 1/(n+1); the unknowns live on
/// the n interior nodes. The grid owns the sine table sin(j*k*pi/(n+1)) and
/// the exact eigenvalues of the second-difference Dirichlet matrix, so every
/// field on the same grid shares them.
class Grid1D {
 public:
  /// Largest interior size accepted; the sine table is dense n*n.
  static constexpr std::size_t kMaxInterior = 4096;

  explicit Grid1D(std::size_t n_interior);

  static std::shared_ptr<const Grid1D> make(std::size_t n_interior);

  std::size_t n_interior() const noexcept { return n_; }
  double h() const noexcept { return h_; }

  /// Node coordinate for j in 0..n+1.
  double x(std::size_t j) const noexcept;

  /// sin(j*k*pi/(n+1)) for j, k in 1..n.
  double sine(std::size_t j, std::size_t k) const noexcept {
    return sine_[(j - 1) * n_ + (k - 1)];
  }

  /// Row-major n*n sine table, entry (j-1, k-1). Symmetric.
  std::span<const double> sine_table() const noexcept { return sine_; }

  /// lambda_k = -(4/h^2) sin^2(k*pi*h/2), stored at index k-1.
  std::span<const double> eigenvalues() const noexcept { return lambda_; }

  bool operator==(const Grid1D& other) const noexcept { return n_ == other.n_; }

 private:
  std::size_t n_;
  double h_;
  std::vector<double> sine_;
  std::vector<double> lambda_;
};

using GridPtr = std::shared_ptr<const Grid1D>;

}  // namespace pdae
