#include "pdae/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pdae {

Grid1D::Grid1D(std::size_t n_interior) : n_(n_interior) {
  if (n_ == 0) {
    throw std::invalid_argument("Grid1D: n_interior must be positive");
  }
  if (n_ > kMaxInterior) {
    throw std::invalid_argument("Grid1D: n_interior " + std::to_string(n_) +
                                " exceeds limit " +
                                std::to_string(kMaxInterior));
  }
  const std::size_t m = n_ + 1;
  h_ = 1.0 / static_cast<double>(m);

  // Reduce j*k modulo the period 2(n+1) before taking the sine so the table
  // is accurate to a few ulps regardless of n.
  sine_.resize(n_ * n_);
  const std::size_t period = 2 * m;
  for (std::size_t j = 1; j <= n_; ++j) {
    for (std::size_t k = j; k <= n_; ++k) {
      const std::size_t r = (j * k) % period;
      const double s = std::sin(std::numbers::pi * static_cast<double>(r) /
                                static_cast<double>(m));
      sine_[(j - 1) * n_ + (k - 1)] = s;
      sine_[(k - 1) * n_ + (j - 1)] = s;
    }
  }

  lambda_.resize(n_);
  const double scale = 4.0 / (h_ * h_);
  for (std::size_t k = 1; k <= n_; ++k) {
    const double s = std::sin(static_cast<double>(k) * std::numbers::pi * h_ / 2.0);
    lambda_[k - 1] = -scale * s * s;
  }
}

std::shared_ptr<const Grid1D> Grid1D::make(std::size_t n_interior) {
  return std::make_shared<const Grid1D>(n_interior);
}

double Grid1D::x(std::size_t j) const noexcept {
  if (j == n_ + 1) return 1.0;
  return static_cast<double>(j) * h_;
}

}  // namespace pdae
