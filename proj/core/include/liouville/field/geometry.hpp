#pragma once

#include <memory>
#include <variant>

#include "liouville/field/point.hpp"

namespace liouville {

struct Disk {
  Point center;
  double radius = 1.0;
};

struct Annulus {
  Point center;
  double r_in = 0.0;
  double r_out = 1.0;
};

struct Box {
  double xmin = 0.0;
  double xmax = 0.0;
  double ymin = 0.0;
  double ymax = 0.0;
};

struct Geometry;

struct Complement {
  std::shared_ptr<const Geometry> inner;
};

/// Exact geometric descriptor of a region of the plane.
struct Geometry {
  std::variant<Disk, Annulus, Box, Complement> shape;
};

Geometry disk(Point center, double radius);
Geometry annulus(Point center, double r_in, double r_out);
Geometry box(double xmin, double xmax, double ymin, double ymax);
Geometry complement(Geometry inner);

/// Throws std::invalid_argument for non-positive radii or inverted extents.
void validate(const Geometry& g);

bool contains(const Geometry& g, Point p);

/// Area of g intersected with the axis-aligned rectangle, computed exactly.
double intersection_area(const Geometry& g, double x0, double x1, double y0, double y1);

/// Area of the disk of the given radius centered at the origin intersected
/// with [x0, x1] x [y0, y1].
double disk_rectangle_area(double radius, double x0, double x1, double y0, double y1);

}  // namespace liouville
