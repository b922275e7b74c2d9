#include "liouville/field/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace liouville {

Grid2D::Grid2D(Point center, double half_width, int n)
    : center_(center), half_width_(half_width), n_(n), h_(0.0) {
  if (n < 4) {
    throw std::invalid_argument("Grid2D: need at least 4 cells per axis, got " + std::to_string(n));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("Grid2D: half_width must be positive and finite");
  }
  if (!std::isfinite(center.x) || !std::isfinite(center.y)) {
    throw std::invalid_argument("Grid2D: center must be finite");
  }
  h_ = 2.0 * half_width / n;
}

std::pair<double, double> Grid2D::lattice_coords(Point p) const {
  return {(p.x - center_.x + half_width_) / h_ - 0.5, (p.y - center_.y + half_width_) / h_ - 0.5};
}

std::pair<int, int> Grid2D::nearest_node(Point p) const {
  const auto [fx, fy] = lattice_coords(p);
  const int i = std::clamp(static_cast<int>(std::lround(fx)), 0, n_ - 1);
  const int j = std::clamp(static_cast<int>(std::lround(fy)), 0, n_ - 1);
  return {i, j};
}

Grid2D make_grid(Point center, double half_width, int n) { return Grid2D(center, half_width, n); }

}  // namespace liouville
