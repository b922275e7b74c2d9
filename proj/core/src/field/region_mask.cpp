#include "liouville/field/region_mask.hpp"

#include <algorithm>
#include <stdexcept>

#include "liouville/field/scalar_field.hpp"

namespace liouville {

RegionMask::RegionMask(Grid2D grid, std::vector<unsigned char> flags)
    : grid_(grid), flags_(std::move(flags)) {
  if (flags_.size() != grid_.size()) throw std::invalid_argument("RegionMask: flag count mismatch");
  weights_.resize(flags_.size());
  for (std::size_t k = 0; k < flags_.size(); ++k) weights_[k] = flags_[k] ? 1.0 : 0.0;
  empty_warning_ = empty();
}

RegionMask::RegionMask(Grid2D grid, std::vector<unsigned char> flags, std::vector<double> weights,
                       std::optional<Geometry> geometry)
    : grid_(grid),
      flags_(std::move(flags)),
      weights_(std::move(weights)),
      geometry_(std::move(geometry)) {
  if (flags_.size() != grid_.size() || weights_.size() != grid_.size()) {
    throw std::invalid_argument("RegionMask: size mismatch");
  }
  empty_warning_ = empty();
}

bool RegionMask::empty() const {
  return std::none_of(weights_.begin(), weights_.end(), [](double w) { return w > 0.0; }) &&
         std::none_of(flags_.begin(), flags_.end(), [](unsigned char f) { return f != 0; });
}

std::size_t RegionMask::count() const {
  return static_cast<std::size_t>(std::count_if(flags_.begin(), flags_.end(),
                                                [](unsigned char f) { return f != 0; }));
}

double RegionMask::area() const {
  double sum = 0.0;
  for (double w : weights_) sum += w;
  return sum * grid_.cell_area();
}

std::optional<Disk> RegionMask::as_disk() const {
  if (!geometry_) return std::nullopt;
  if (const auto* d = std::get_if<Disk>(&geometry_->shape)) return *d;
  return std::nullopt;
}

RegionMask region_mask(const Grid2D& grid, const Geometry& geometry) {
  validate(geometry);
  const double h = grid.h();
  const double inv_area = 1.0 / grid.cell_area();
  std::vector<unsigned char> flags(grid.size(), 0);
  std::vector<double> weights(grid.size(), 0.0);
  for (int j = 0; j < grid.n(); ++j) {
    for (int i = 0; i < grid.n(); ++i) {
      const Point c = grid.node(i, j);
      const std::size_t k = grid.index(i, j);
      flags[k] = contains(geometry, c) ? 1 : 0;
      const double frac =
          intersection_area(geometry, c.x - 0.5 * h, c.x + 0.5 * h, c.y - 0.5 * h, c.y + 0.5 * h) *
          inv_area;
      // Round-off near 0 and 1 would otherwise leak into every quadrature.
      weights[k] = frac < 1e-14 ? 0.0 : (frac > 1.0 - 1e-14 ? 1.0 : frac);
    }
  }
  return RegionMask(grid, std::move(flags), std::move(weights), geometry);
}

RegionMask whole_grid(const Grid2D& grid) {
  return RegionMask(grid, std::vector<unsigned char>(grid.size(), 1));
}

RegionMask mask_from_predicate(const Grid2D& grid, const std::function<bool(Point)>& inside) {
  std::vector<unsigned char> flags(grid.size(), 0);
  for (std::size_t k = 0; k < grid.size(); ++k) flags[k] = inside(grid.node(k)) ? 1 : 0;
  return RegionMask(grid, std::move(flags));
}

RegionMask interior_mask(const Grid2D& grid, int ring) {
  std::vector<unsigned char> flags(grid.size(), 0);
  for (int j = ring; j < grid.n() - ring; ++j) {
    for (int i = ring; i < grid.n() - ring; ++i) flags[grid.index(i, j)] = 1;
  }
  return RegionMask(grid, std::move(flags));
}

RegionMask mask_union(const RegionMask& a, const RegionMask& b) {
  require_same_grid(a.grid(), b.grid(), "mask_union");
  const std::size_t n = a.grid().size();
  std::vector<unsigned char> flags(n);
  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    flags[k] = static_cast<unsigned char>(a.flag(k) || b.flag(k));
    weights[k] = std::min(1.0, a.weight(k) + b.weight(k));
  }
  return RegionMask(a.grid(), std::move(flags), std::move(weights), std::nullopt);
}

RegionMask mask_difference(const RegionMask& a, const RegionMask& b) {
  require_same_grid(a.grid(), b.grid(), "mask_difference");
  const std::size_t n = a.grid().size();
  std::vector<unsigned char> flags(n);
  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    flags[k] = static_cast<unsigned char>(a.flag(k) && !b.flag(k));
    weights[k] = std::max(0.0, a.weight(k) - b.weight(k));
  }
  return RegionMask(a.grid(), std::move(flags), std::move(weights), std::nullopt);
}

RegionMask mask_intersection(const RegionMask& a, const RegionMask& b) {
  require_same_grid(a.grid(), b.grid(), "mask_intersection");
  const std::size_t n = a.grid().size();
  std::vector<unsigned char> flags(n);
  std::vector<double> weights(n);
  for (std::size_t k = 0; k < n; ++k) {
    flags[k] = static_cast<unsigned char>(a.flag(k) && b.flag(k));
    weights[k] = a.weight(k) * b.weight(k);
  }
  return RegionMask(a.grid(), std::move(flags), std::move(weights), std::nullopt);
}

bool overlaps(const RegionMask& a, const RegionMask& b) {
  require_same_grid(a.grid(), b.grid(), "overlaps");
  for (std::size_t k = 0; k < a.grid().size(); ++k) {
    if (a.weight(k) > 0.0 && b.weight(k) > 0.0) return true;
  }
  return false;
}

}  // namespace liouville
