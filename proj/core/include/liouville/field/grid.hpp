#pragma once

#include <cstddef>
#include <utility>

#include "liouville/field/point.hpp"

namespace liouville {

/// Uniform cell-centered square grid covering
/// [cx - L, cx + L] x [cy - L, cy + L] with n cells per axis.
///
/// Node (i, j) sits at the center of cell (i, j); i runs along x and j along
/// y. Storage order of every field on the grid is row-major in j, i.e.
/// index(i, j) = j * n + i.
class Grid2D {
 public:
  Grid2D(Point center, double half_width, int n);

  Point center() const { return center_; }
  double half_width() const { return half_width_; }
  int n() const { return n_; }
  double h() const { return h_; }
  double cell_area() const { return h_ * h_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }

  Point node(int i, int j) const {
    return {center_.x + (i + 0.5) * h_ - half_width_, center_.y + (j + 0.5) * h_ - half_width_};
  }
  Point node(std::size_t idx) const {
    return node(static_cast<int>(idx % static_cast<std::size_t>(n_)),
                static_cast<int>(idx / static_cast<std::size_t>(n_)));
  }

  double xmin() const { return center_.x - half_width_; }
  double xmax() const { return center_.x + half_width_; }
  double ymin() const { return center_.y - half_width_; }
  double ymax() const { return center_.y + half_width_; }

  bool covers(Point p) const {
    return p.x >= xmin() && p.x <= xmax() && p.y >= ymin() && p.y <= ymax();
  }

  /// Indices of the node closest to p, clamped to the grid.
  std::pair<int, int> nearest_node(Point p) const;

  /// Continuous lattice coordinates of p: node(i, j) maps to (i, j).
  std::pair<double, double> lattice_coords(Point p) const;

  friend bool operator==(const Grid2D& a, const Grid2D& b) {
    return a.center_ == b.center_ && a.half_width_ == b.half_width_ && a.n_ == b.n_;
  }

 private:
  Point center_;
  double half_width_;
  int n_;
  double h_;
};

Grid2D make_grid(Point center, double half_width, int n);

}  // namespace liouville
