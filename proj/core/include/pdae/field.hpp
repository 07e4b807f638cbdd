#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pdae/grid.hpp"

namespace pdae {

/// Thrown when two grid functions defined on different grids are combined.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Real-valued grid function on the interior nodes of a Grid1D.
///
/// Boundary values are implicitly zero (Dirichlet unknowns). Utility fields
/// such as integrals of a Dirichlet field carry explicit boundary values,
/// set through the (left, right) pair.
class Field {
 public:
  explicit Field(GridPtr grid);
  Field(GridPtr grid, std::vector<double> values);
  Field(GridPtr grid, std::vector<double> values, double left, double right);

  /// Samples fn at the interior nodes.
  static Field sample(GridPtr grid, const std::function<double(double)>& fn);

  const Grid1D& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  /// Interior value i, i.e. node j = i+1.
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }

  bool has_boundary() const noexcept { return boundary_.has_value(); }
  double left() const noexcept { return boundary_ ? boundary_->first : 0.0; }
  double right() const noexcept { return boundary_ ? boundary_->second : 0.0; }
  void set_boundary(double left, double right) { boundary_.emplace(left, right); }
  void clear_boundary() noexcept { boundary_.reset(); }

  /// Value at node j in 0..n+1, boundary included.
  double at_node(std::size_t j) const noexcept;

  bool all_finite() const noexcept;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(double s) noexcept;

 private:
  GridPtr grid_;
  std::vector<double> values_;
  std::optional<std::pair<double, double>> boundary_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double s, Field a);
Field operator*(Field a, double s);

/// Discrete L2 norm sqrt(h * sum_j f_j^2) over interior nodes.
double l2_norm(const Field& f);
double max_norm(const Field& f);
/// Discrete L2 inner product h * sum_j a_j b_j.
double inner(const Field& a, const Field& b);

void require_same_grid(const Field& a, const Field& b, const char* where);

/// U = (u, v) in H = L2 x L2.
struct StateU {
  Field u;
  Field v;

  explicit StateU(GridPtr grid) : u(grid), v(grid) {}
  StateU(Field u_, Field v_);

  const Grid1D& grid() const noexcept { return u.grid(); }
  const GridPtr& grid_ptr() const noexcept { return u.grid_ptr(); }
  bool all_finite() const noexcept { return u.all_finite() && v.all_finite(); }

  StateU& operator+=(const StateU& other);
  StateU& operator-=(const StateU& other);
  StateU& operator*=(double s) noexcept;
};

StateU operator+(StateU a, const StateU& b);
StateU operator-(StateU a, const StateU& b);
StateU operator*(double s, StateU a);

/// sqrt(||u||^2 + ||v||^2).
double norm(const StateU& U);
double inner(const StateU& a, const StateU& b);

/// Coefficients in the discrete sine eigenbasis; entry k-1 multiplies
/// sin(k*pi*x_j).
struct SineCoeffs {
  GridPtr grid;
  std::vector<double> coeffs;
};

}  // namespace pdae
