#include "liouville/field/scalar_field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "liouville/errors.hpp"
#include "liouville/field/region_mask.hpp"

namespace liouville {

ScalarField::ScalarField(Grid2D grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

ScalarField::ScalarField(Grid2D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("ScalarField: value count does not match grid");
  }
}

ScalarField ScalarField::from_function(const Grid2D& grid, const std::function<double(Point)>& f) {
  ScalarField out(grid);
  for (int j = 0; j < grid.n(); ++j) {
    for (int i = 0; i < grid.n(); ++i) {
      out.at(i, j) = f(grid.node(i, j));
    }
  }
  return out;
}

void ScalarField::set_validity(std::vector<unsigned char> valid) {
  if (!valid.empty() && valid.size() != values_.size()) {
    throw std::invalid_argument("ScalarField: validity size does not match grid");
  }
  valid_ = std::move(valid);
}

void ScalarField::require_finite(const char* what) const {
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (valid(k) && !std::isfinite(values_[k])) {
      const Point p = grid_.node(k);
      throw NumericError(std::string(what) + ": non-finite value at (" + std::to_string(p.x) + ", " +
                         std::to_string(p.y) + ")");
    }
  }
}

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* context) {
  if (!(a == b)) {
    throw GridMismatch(std::string(context) + ": operands live on different grids");
  }
}

void ScalarField::check_same_grid(const ScalarField& other) const {
  require_same_grid(grid_, other.grid_, "ScalarField");
}

namespace {

std::vector<unsigned char> merge_validity(const std::vector<unsigned char>& a,
                                          const std::vector<unsigned char>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<unsigned char> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = static_cast<unsigned char>(a[k] && b[k]);
  return out;
}

}  // namespace

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  check_same_grid(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  valid_ = merge_validity(valid_, other.valid_);
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  check_same_grid(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  valid_ = merge_validity(valid_, other.valid_);
  return *this;
}

ScalarField& ScalarField::operator*=(const ScalarField& other) {
  check_same_grid(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] *= other.values_[k];
  valid_ = merge_validity(valid_, other.valid_);
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField ScalarField::map(const std::function<double(double)>& f) const {
  ScalarField out = *this;
  for (double& v : out.values_) v = f(v);
  return out;
}

double sup_abs(const ScalarField& f, const RegionMask& mask) {
  require_same_grid(f.grid(), mask.grid(), "sup_abs");
  double best = 0.0;
  for (std::size_t k = 0; k < f.grid().size(); ++k) {
    if (mask.flag(k) && f.valid(k)) best = std::max(best, std::abs(f[k]));
  }
  return best;
}

double max_over(const ScalarField& f, const RegionMask& mask) {
  require_same_grid(f.grid(), mask.grid(), "max_over");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < f.grid().size(); ++k) {
    if (mask.flag(k) && f.valid(k)) best = std::max(best, f[k]);
  }
  if (!std::isfinite(best)) throw std::invalid_argument("max_over: empty mask");
  return best;
}

double min_over(const ScalarField& f, const RegionMask& mask) {
  require_same_grid(f.grid(), mask.grid(), "min_over");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < f.grid().size(); ++k) {
    if (mask.flag(k) && f.valid(k)) best = std::min(best, f[k]);
  }
  if (!std::isfinite(best)) throw std::invalid_argument("min_over: empty mask");
  return best;
}

}  // namespace liouville
