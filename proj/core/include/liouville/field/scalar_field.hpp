#pragma once

#include <functional>
#include <span>
#include <vector>

#include "liouville/field/grid.hpp"

namespace liouville {

class RegionMask;

/// Values of a function at the nodes of a Grid2D.
///
/// A field may carry a validity flag per node (used by the finite-difference
/// Laplacian to exclude the boundary ring). Invalid nodes hold 0 and are
/// skipped by the norm helpers.
class ScalarField {
 public:
  explicit ScalarField(Grid2D grid, double fill = 0.0);
  ScalarField(Grid2D grid, std::vector<double> values);

  static ScalarField from_function(const Grid2D& grid, const std::function<double(Point)>& f);

  const Grid2D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double at(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& at(int i, int j) { return values_[grid_.index(i, j)]; }
  double operator[](std::size_t idx) const { return values_[idx]; }
  double& operator[](std::size_t idx) { return values_[idx]; }

  bool has_validity() const { return !valid_.empty(); }
  bool valid(std::size_t idx) const { return valid_.empty() || valid_[idx] != 0; }
  void set_validity(std::vector<unsigned char> valid);

  /// Throws NumericError if any valid value is not finite.
  void require_finite(const char* what) const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(const ScalarField& other);
  ScalarField& operator*=(double s);

  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, const ScalarField& b) { return a *= b; }
  friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

  ScalarField map(const std::function<double(double)>& f) const;

 private:
  void check_same_grid(const ScalarField& other) const;

  Grid2D grid_;
  std::vector<double> values_;
  std::vector<unsigned char> valid_;
};

void require_same_grid(const Grid2D& a, const Grid2D& b, const char* context);

/// Largest |value| over valid nodes that are flagged in the mask.
double sup_abs(const ScalarField& f, const RegionMask& mask);
/// Largest value over valid flagged nodes.
double max_over(const ScalarField& f, const RegionMask& mask);
/// Smallest value over valid flagged nodes.
double min_over(const ScalarField& f, const RegionMask& mask);

}  // namespace liouville
