#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "liouville/field/geometry.hpp"
#include "liouville/field/grid.hpp"

namespace liouville {

/// A subset of grid cells.
///
/// `flag(k)` is membership of the cell center. `weight(k)` is the fraction of
/// cell k covered by the region: the exact covered-area fraction when an exact
/// geometry is attached, and 0/1 (equal to the flag) otherwise. Quadrature
/// uses weights; pointwise statements (max, min, residual sups) use flags.
class RegionMask {
 public:
  RegionMask(Grid2D grid, std::vector<unsigned char> flags);
  RegionMask(Grid2D grid, std::vector<unsigned char> flags, std::vector<double> weights,
             std::optional<Geometry> geometry);

  const Grid2D& grid() const { return grid_; }
  bool flag(std::size_t k) const { return flags_[k] != 0; }
  double weight(std::size_t k) const { return weights_[k]; }
  const std::vector<double>& weights() const { return weights_; }
  const std::optional<Geometry>& geometry() const { return geometry_; }

  /// Set when the region does not meet the grid at all.
  bool empty_warning() const { return empty_warning_; }
  bool empty() const;
  std::size_t count() const;

  /// Sum of weights times the cell area.
  double area() const;

  /// The exact disk descriptor, if this mask was built from a disk.
  std::optional<Disk> as_disk() const;

 private:
  Grid2D grid_;
  std::vector<unsigned char> flags_;
  std::vector<double> weights_;
  std::optional<Geometry> geometry_;
  bool empty_warning_ = false;
};

RegionMask region_mask(const Grid2D& grid, const Geometry& geometry);
RegionMask whole_grid(const Grid2D& grid);
RegionMask mask_from_predicate(const Grid2D& grid, const std::function<bool(Point)>& inside);

/// Nodes whose distance to the grid edge is at least `ring` cells.
RegionMask interior_mask(const Grid2D& grid, int ring = 1);

/// Union of two disjoint regions. Weights add (capped at 1), geometry is dropped.
RegionMask mask_union(const RegionMask& a, const RegionMask& b);
/// Cells of `a` with the weight of `b` removed.
RegionMask mask_difference(const RegionMask& a, const RegionMask& b);
/// Pointwise product of weights, flags and-ed.
RegionMask mask_intersection(const RegionMask& a, const RegionMask& b);

/// True if some cell carries positive weight in both masks.
bool overlaps(const RegionMask& a, const RegionMask& b);

}  // namespace liouville
