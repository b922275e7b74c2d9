#pragma once

#include <functional>
#include <memory>

#include "liouville/field/point.hpp"

namespace liouville {

using RadialProfile = std::function<double(double)>;

/// Mean of |x - y|^(-mu) over the circle |y| = s, for |x| = r.
double angular_mean_kernel(double mu, double r, double s);

/// 2 pi * int_{s0}^{s1} rho(s) s K(r, s) ds: the Riesz potential at radius r
/// of the radial density rho restricted to the annulus s0 < |y| < s1.
double riesz_radial(const RadialProfile& rho, double mu, double r, double s0,
                    double s1 = std::numeric_limits<double>::infinity());

/// 2 pi * int_{s0}^{s1} rho(s) s ds.
double radial_mass(const RadialProfile& rho, double s0, double s1 = std::numeric_limits<double>::infinity());

/// -int_{s0}^{inf} rho(s) s log max(s, r) ds: the log potential -(1/2 pi) log * rho
/// at radius r of the part of rho beyond s0.
double log_radial_tail(const RadialProfile& rho, double r, double s0);

/// Smooth interpolant of a radial function on [0, r_max], with a separate
/// piece on each side of `r_break` where the function may have a kink.
class RadialInterpolant {
 public:
  RadialInterpolant(const std::function<double(double)>& f, double r_break, double r_max, int knots = 256);
  double operator()(double r) const;

 private:
  struct Piece;
  std::shared_ptr<const Piece> inner_;
  std::shared_ptr<const Piece> outer_;
  double r_break_;
};

}  // namespace liouville
