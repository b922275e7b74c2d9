#include "liouville/potential/radial.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace liouville {

namespace {

constexpr double kPi = std::numbers::pi;

// 2F1(a, b; c; z) by its power series, for 0 <= z <= 1/2.
double hyp_series(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 200; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * sum) break;
  }
  return sum;
}

template <class F>
double integrate_finite(F f, double a, double b) {
  if (!(b > a)) return 0.0;
  static thread_local boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-10);
}

template <class F>
double integrate_to_infinity(F f, double a) {
  static thread_local boost::math::quadrature::exp_sinh<double> es;
  return es.integrate([&](double t) { return f(a + t); }, 0.0, std::numeric_limits<double>::infinity(), 1e-10);
}

}  // namespace

double angular_mean_kernel(double mu, double r, double s) {
  const double hi = std::max(r, s);
  const double lo = std::min(r, s);
  if (hi == 0.0) return std::numeric_limits<double>::infinity();
  const double z = (lo / hi) * (lo / hi);
  const double a = 0.5 * mu;
  if (z <= 0.5) return std::pow(hi, -mu) * hyp_series(a, a, 1.0, z);
  const double w = 1.0 - z;
  if (w <= 0.0) return mu < 1.0 ? std::pow(hi, -mu) * std::tgamma(1.0 - mu) / std::pow(std::tgamma(1.0 - a), 2)
                                 : std::numeric_limits<double>::infinity();
  if (mu == 1.0) return std::pow(hi, -mu) * 2.0 / kPi * boost::math::ellint_1(std::sqrt(z));
  if (std::abs(mu - 1.0) > 1e-3) {
    // Connection formula about z = 1; both series run in w <= 1/2.
    const double A = std::tgamma(1.0 - mu) / (std::tgamma(1.0 - a) * std::tgamma(1.0 - a));
    const double B = std::tgamma(mu - 1.0) / (std::tgamma(a) * std::tgamma(a));
    const double f = A * hyp_series(a, a, mu, w) + B * std::pow(w, 1.0 - mu) * hyp_series(1.0 - a, 1.0 - a, 2.0 - mu, w);
    return std::pow(hi, -mu) * f;
  }
  // Close to mu = 1 the two terms cancel; integrate over the angle instead.
  auto f = [&](double th) {
    const double d2 = (hi - lo) * (hi - lo) + 4.0 * hi * lo * std::sin(0.5 * th) * std::sin(0.5 * th);
    // Underflow at the endpoint of an integrable singularity.
    return d2 > 0.0 ? std::pow(d2, -0.5 * mu) : 0.0;
  };
  return integrate_finite(f, 0.0, kPi) / kPi;
}

double riesz_radial(const RadialProfile& rho, double mu, double r, double s0, double s1) {
  if (!(s1 > s0)) return 0.0;
  auto g = [&](double s) {
    if (!(s > 0.0)) return 0.0;
    const double v = rho(s) * s * angular_mean_kernel(mu, r, s);
    return std::isfinite(v) ? v : 0.0;
  };
  double sum = 0.0;
  const double mid = std::clamp(r, s0, s1);
  sum += integrate_finite(g, s0, mid);
  if (std::isinf(s1)) {
    sum += integrate_to_infinity(g, mid);
  } else {
    sum += integrate_finite(g, mid, s1);
  }
  return 2.0 * kPi * sum;
}

double radial_mass(const RadialProfile& rho, double s0, double s1) {
  auto g = [&](double s) { return rho(s) * s; };
  const double v = std::isinf(s1) ? integrate_to_infinity(g, s0) : integrate_finite(g, s0, s1);
  return 2.0 * kPi * v;
}

double log_radial_tail(const RadialProfile& rho, double r, double s0) {
  const double mid = std::max(r, s0);
  double sum = 0.0;
  if (r > s0) sum += std::log(r) * integrate_finite([&](double s) { return rho(s) * s; }, s0, r);
  sum += integrate_to_infinity([&](double s) { return rho(s) * s * std::log(s); }, mid);
  return -sum;
}

struct RadialInterpolant::Piece {
  boost::math::interpolators::cardinal_cubic_b_spline<double> spline;
};

RadialInterpolant::RadialInterpolant(const std::function<double(double)>& f, double r_break, double r_max,
                                     int knots)
    : r_break_(r_break) {
  if (!(r_break > 0.0) || !(r_max >= r_break) || knots < 8) {
    throw std::invalid_argument("RadialInterpolant: bad range");
  }
  auto build = [&](double a, double b) {
    std::vector<double> v(static_cast<std::size_t>(knots));
    const double step = (b - a) / (knots - 1);
    for (int i = 0; i < knots; ++i) v[static_cast<std::size_t>(i)] = f(a + i * step);
    return std::make_shared<const Piece>(
        Piece{boost::math::interpolators::cardinal_cubic_b_spline<double>(v.begin(), v.end(), a, step)});
  };
  inner_ = build(0.0, r_break);
  if (r_max > r_break) outer_ = build(r_break, r_max);
}

double RadialInterpolant::operator()(double r) const {
  if (r <= r_break_ || !outer_) return inner_->spline(r);
  return outer_->spline(r);
}

}  // namespace liouville
