#include "liouville/field/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liouville {

Geometry disk(Point center, double radius) { return Geometry{Disk{center, radius}}; }
Geometry annulus(Point center, double r_in, double r_out) {
  return Geometry{Annulus{center, r_in, r_out}};
}
Geometry box(double xmin, double xmax, double ymin, double ymax) {
  return Geometry{Box{xmin, xmax, ymin, ymax}};
}
Geometry complement(Geometry inner) {
  return Geometry{Complement{std::make_shared<const Geometry>(std::move(inner))}};
}

void validate(const Geometry& g) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          if (!(s.radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
        } else if constexpr (std::is_same_v<T, Annulus>) {
          if (!(s.r_in >= 0.0) || !(s.r_out > s.r_in)) {
            throw std::invalid_argument("annulus needs 0 <= r_in < r_out");
          }
        } else if constexpr (std::is_same_v<T, Box>) {
          if (!(s.xmax > s.xmin) || !(s.ymax > s.ymin)) {
            throw std::invalid_argument("box extents are inverted or empty");
          }
        } else {
          if (!s.inner) throw std::invalid_argument("complement of nothing");
          validate(*s.inner);
        }
      },
      g.shape);
}

bool contains(const Geometry& g, Point p) {
  return std::visit(
      [p](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return norm2(p - s.center) < s.radius * s.radius;
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double r2 = norm2(p - s.center);
          return r2 >= s.r_in * s.r_in && r2 < s.r_out * s.r_out;
        } else if constexpr (std::is_same_v<T, Box>) {
          return p.x >= s.xmin && p.x < s.xmax && p.y >= s.ymin && p.y < s.ymax;
        } else {
          return !contains(*s.inner, p);
        }
      },
      g.shape);
}

namespace {

// Area of {|z| < r} intersected with [0, a] x [0, b] for a, b >= 0.
double quadrant_area(double r, double a, double b) {
  a = std::min(a, r);
  b = std::min(b, r);
  if (a <= 0.0 || b <= 0.0) return 0.0;
  if (a * a + b * b <= r * r) return a * b;
  // Below the chord: x in [0, xs] the top is y = b, beyond that the arc.
  const double xs = std::sqrt(std::max(0.0, r * r - b * b));
  auto arc_primitive = [r](double x) {
    const double s = std::sqrt(std::max(0.0, r * r - x * x));
    return 0.5 * (x * s + r * r * std::asin(std::clamp(x / r, -1.0, 1.0)));
  };
  return b * xs + arc_primitive(a) - arc_primitive(xs);
}

double signed_quadrant_area(double r, double a, double b) {
  const double s = (a < 0.0 ? -1.0 : 1.0) * (b < 0.0 ? -1.0 : 1.0);
  return s * quadrant_area(r, std::abs(a), std::abs(b));
}

}  // namespace

double disk_rectangle_area(double radius, double x0, double x1, double y0, double y1) {
  const double area = signed_quadrant_area(radius, x1, y1) - signed_quadrant_area(radius, x0, y1) -
                      signed_quadrant_area(radius, x1, y0) + signed_quadrant_area(radius, x0, y0);
  return std::clamp(area, 0.0, (x1 - x0) * (y1 - y0));
}

double intersection_area(const Geometry& g, double x0, double x1, double y0, double y1) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return disk_rectangle_area(s.radius, x0 - s.center.x, x1 - s.center.x, y0 - s.center.y,
                                     y1 - s.center.y);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double outer = disk_rectangle_area(s.r_out, x0 - s.center.x, x1 - s.center.x,
                                                   y0 - s.center.y, y1 - s.center.y);
          const double inner =
              s.r_in > 0.0 ? disk_rectangle_area(s.r_in, x0 - s.center.x, x1 - s.center.x,
                                                 y0 - s.center.y, y1 - s.center.y)
                           : 0.0;
          return std::max(0.0, outer - inner);
        } else if constexpr (std::is_same_v<T, Box>) {
          const double w = std::max(0.0, std::min(x1, s.xmax) - std::max(x0, s.xmin));
          const double hgt = std::max(0.0, std::min(y1, s.ymax) - std::max(y0, s.ymin));
          return w * hgt;
        } else {
          const double total = (x1 - x0) * (y1 - y0);
          return std::max(0.0, total - intersection_area(*s.inner, x0, x1, y0, y1));
        }
      },
      g.shape);
}

}  // namespace liouville
