#include "liouville/potential/kernels.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liouville/closed_forms/exponents.hpp"

namespace liouville {

namespace {

// int_0^T (1 + t^2)^(-mu/2) dt
double shear_integral(double mu, double T) {
  if (T == 0.0) return 0.0;
  if (mu == 1.0) return std::asinh(T);
  auto f = [mu](double t) { return std::pow(1.0 + t * t, -0.5 * mu); };
  // The integrand is analytic with poles at +-i; unit pieces keep a 30-point
  // Gauss rule at machine precision.
  const int pieces = std::max(1, static_cast<int>(std::ceil(T)));
  const double step = T / pieces;
  double sum = 0.0;
  for (int k = 0; k < pieces; ++k) {
    sum += boost::math::quadrature::gauss<double, 30>::integrate(f, k * step, (k + 1) * step);
  }
  return sum;
}

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

template <class Corner>
double rectangle(Corner corner, double x0, double x1, double y0, double y1) {
  auto F = [&](double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    return sgn(a) * sgn(b) * corner(std::abs(a), std::abs(b));
  };
  return F(x1, y1) - F(x0, y1) - F(x1, y0) + F(x0, y0);
}

// |dx| >= |dy| >= 0, so every caller sees the same floating-point path.
std::pair<double, double> canonical(double dx, double dy) {
  dx = std::abs(dx);
  dy = std::abs(dy);
  if (dx < dy) std::swap(dx, dy);
  return {dx, dy};
}

}  // namespace

double riesz_corner(double mu, double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double e = 2.0 - mu;
  return (std::pow(a, e) * shear_integral(mu, b / a) + std::pow(b, e) * shear_integral(mu, a / b)) / e;
}

double log_corner(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b * (std::log(a * a + b * b) - 3.0) + a * a * std::atan(b / a) + b * b * std::atan(a / b);
}

double riesz_unit_average(double mu, double dx, double dy) {
  const auto [x, y] = canonical(dx, dy);
  return rectangle([mu](double a, double b) { return riesz_corner(mu, a, b); }, x - 0.5, x + 0.5, y - 0.5,
                   y + 0.5);
}

double log_unit_average(double dx, double dy) {
  const auto [x, y] = canonical(dx, dy);
  return 0.5 * rectangle(log_corner, x - 0.5, x + 0.5, y - 0.5, y + 0.5);
}

double riesz_weight(double mu, double h, double dx, double dy, SingularRule rule) {
  const auto [x, y] = canonical(dx, dy);
  const double scale = std::pow(h, -mu);
  const double r2 = x * x + y * y;
  if (rule == SingularRule::PolarLocal) {
    if (x < 0.5 && y < 0.5) {
      const double a = 1.0 / std::sqrt(std::numbers::pi);
      return scale * 2.0 * std::pow(a, -mu) / (2.0 - mu);
    }
    return scale * std::pow(r2, -0.5 * mu);
  }
  if (x <= kNearRadius) return scale * riesz_unit_average(mu, x, y);
  return scale * std::pow(r2, -0.5 * mu) * (1.0 + mu * mu / (24.0 * r2));
}

double log_weight(double h, double dx, double dy) {
  const auto [x, y] = canonical(dx, dy);
  if (x <= kNearRadius) return std::log(h) + log_unit_average(x, y);
  return std::log(h) + 0.5 * std::log(x * x + y * y);
}

KernelTable::KernelTable(Kind kind, double mu, double h, SingularRule rule)
    : kind_(kind), mu_(mu), h_(h), rule_(rule) {
  if (!(h > 0.0)) throw std::invalid_argument("KernelTable: h must be positive");
  near_.resize(static_cast<std::size_t>((kNearRadius + 1) * (kNearRadius + 2) / 2));
  for (int a = 0; a <= kNearRadius; ++a) {
    for (int b = 0; b <= a; ++b) {
      near_[static_cast<std::size_t>(a * (a + 1) / 2 + b)] =
          kind_ == Kind::Riesz ? riesz_weight(mu_, h_, a, b, rule_) : log_weight(h_, a, b);
    }
  }
}

KernelTable KernelTable::riesz(double mu, double h, SingularRule rule) {
  require_mu(mu);
  return KernelTable(Kind::Riesz, mu, h, rule);
}

KernelTable KernelTable::logarithmic(double h) { return KernelTable(Kind::Log, 0.0, h, SingularRule::CellAverage); }

double KernelTable::far_weight(int a, int b) const {
  return kind_ == Kind::Riesz ? riesz_weight(mu_, h_, a, b, rule_) : log_weight(h_, a, b);
}

double KernelTable::weight(int di, int dj) const {
  int a = std::abs(di);
  int b = std::abs(dj);
  if (a < b) std::swap(a, b);
  if (a <= kNearRadius) return near_[static_cast<std::size_t>(a * (a + 1) / 2 + b)];
  return far_weight(a, b);
}

std::vector<double> KernelTable::dense(int n) const {
  const int m = 2 * n - 1;
  std::vector<double> out(static_cast<std::size_t>(m) * m);
  // Fill one octant and mirror, so the eight symmetric copies are identical.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b <= a; ++b) {
      const double w = weight(a, b);
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          const int x = sa * a, y = sb * b;
          out[static_cast<std::size_t>(y + n - 1) * m + (x + n - 1)] = w;
          out[static_cast<std::size_t>(x + n - 1) * m + (y + n - 1)] = w;
        }
      }
    }
  }
  return out;
}

}  // namespace liouville
