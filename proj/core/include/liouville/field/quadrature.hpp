#pragma once

#include <functional>
#include <optional>

#include "liouville/field/region_mask.hpp"
#include "liouville/field/scalar_field.hpp"

namespace liouville {

/// Radial integrand g(|x - center|) continued analytically past the grid.
///
/// The tail contribution is the integral of g over the plane minus the grid
/// square. The center must coincide with the grid center.
struct RadialTail {
  Point center;
  /// g(r), used on the corner band between the inscribed and circumscribed
  /// circles of the grid square.
  std::function<double(double)> profile;
  /// 2*pi * int_R^inf g(s) s ds, when known in closed form.
  std::function<double(double)> outer_integral;
};

/// g(r) = coef * r^(-exponent), exponent > 2.
RadialTail power_law_tail(Point center, double coef, double exponent);
/// g(r) = amp * (1 + delta^2 r^2)^(-2 s), s > 1/2: a power of a bubble exponential.
RadialTail bubble_tail(Point center, double amp, double delta, double s = 1.0);
/// Any decaying radial profile; the outer integral is done numerically.
RadialTail profile_tail(Point center, std::function<double(double)> g);

/// Integral of the tail over the plane outside the grid square.
double tail_integral(const RadialTail& tail, const Grid2D& grid);

/// Midpoint rule with the mask's cell weights, plus the tail if given.
double integrate(const ScalarField& f, const RegionMask& region,
                 const std::optional<RadialTail>& tail = std::nullopt);

/// Same rule applied to an integrand evaluated on the fly.
double integrate(const std::function<double(Point)>& f, const RegionMask& region);

/// Five-point Laplacian. The outer ring is marked invalid and set to 0.
ScalarField fd_laplacian(const ScalarField& u);

}  // namespace liouville
