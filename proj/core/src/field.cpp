#include "pdae/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pdae {

Field::Field(GridPtr grid) : grid_(std::move(grid)) {
  if (!grid_) throw std::invalid_argument("Field: null grid");
  values_.assign(grid_->n_interior(), 0.0);
}

Field::Field(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("Field: null grid");
  if (values_.size() != grid_->n_interior()) {
    throw std::invalid_argument("Field: got " + std::to_string(values_.size()) +
                                " values for a grid with " +
                                std::to_string(grid_->n_interior()) +
                                " interior nodes");
  }
}

Field::Field(GridPtr grid, std::vector<double> values, double left, double right)
    : Field(std::move(grid), std::move(values)) {
  boundary_.emplace(left, right);
}

Field Field::sample(GridPtr grid, const std::function<double(double)>& fn) {
  Field f(std::move(grid));
  for (std::size_t i = 0; i < f.size(); ++i) f.values_[i] = fn(f.grid_->x(i + 1));
  return f;
}

double Field::at_node(std::size_t j) const noexcept {
  if (j == 0) return left();
  if (j == values_.size() + 1) return right();
  return values_[j - 1];
}

bool Field::all_finite() const noexcept {
  for (double x : values_) {
    if (!std::isfinite(x)) return false;
  }
  if (boundary_) {
    return std::isfinite(boundary_->first) && std::isfinite(boundary_->second);
  }
  return true;
}

void require_same_grid(const Field& a, const Field& b, const char* where) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch(std::string(where) + ": grid mismatch (" +
                       std::to_string(a.grid().n_interior()) + " vs " +
                       std::to_string(b.grid().n_interior()) + " interior nodes)");
  }
}

// If either operand carries boundary values the result carries their
// combination, a missing pair counting as zeros.
Field& Field::operator+=(const Field& other) {
  require_same_grid(*this, other, "Field::operator+=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  if (boundary_ || other.boundary_) {
    set_boundary(left() + other.left(), right() + other.right());
  }
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(*this, other, "Field::operator-=");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  if (boundary_ || other.boundary_) {
    set_boundary(left() - other.left(), right() - other.right());
  }
  return *this;
}

Field& Field::operator*=(double s) noexcept {
  for (double& x : values_) x *= s;
  if (boundary_) {
    boundary_->first *= s;
    boundary_->second *= s;
  }
  return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(double s, Field a) { return a *= s; }
Field operator*(Field a, double s) { return a *= s; }

double l2_norm(const Field& f) { return std::sqrt(inner(f, f)); }

double max_norm(const Field& f) {
  double m = 0.0;
  for (double x : f.values()) m = std::max(m, std::abs(x));
  return m;
}

double inner(const Field& a, const Field& b) {
  require_same_grid(a, b, "inner");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return a.grid().h() * s;
}

StateU::StateU(Field u_, Field v_) : u(std::move(u_)), v(std::move(v_)) {
  require_same_grid(u, v, "StateU");
}

StateU& StateU::operator+=(const StateU& other) {
  u += other.u;
  v += other.v;
  return *this;
}

StateU& StateU::operator-=(const StateU& other) {
  u -= other.u;
  v -= other.v;
  return *this;
}

StateU& StateU::operator*=(double s) noexcept {
  u *= s;
  v *= s;
  return *this;
}

StateU operator+(StateU a, const StateU& b) { return a += b; }
StateU operator-(StateU a, const StateU& b) { return a -= b; }
StateU operator*(double s, StateU a) { return a *= s; }

double norm(const StateU& U) {
  return std::sqrt(inner(U.u, U.u) + inner(U.v, U.v));
}

double inner(const StateU& a, const StateU& b) {
  return inner(a.u, b.u) + inner(a.v, b.v);
}

}  // namespace pdae
