#include "liouville/field/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace liouville {

namespace {

constexpr double kPi = std::numbers::pi;

// Length of the circle |x - c| = r lying outside the square of half-width L
// centered at c, for L < r < sqrt(2) L.
double outside_arc(double r, double half_width) {
  return 8.0 * r * std::acos(half_width / r);
}

}  // namespace

RadialTail power_law_tail(Point center, double coef, double exponent) {
  if (!(exponent > 2.0)) throw std::invalid_argument("power_law_tail: exponent must exceed 2");
  RadialTail t;
  t.center = center;
  t.profile = [coef, exponent](double r) { return coef * std::pow(r, -exponent); };
  t.outer_integral = [coef, exponent](double R) {
    return 2.0 * kPi * coef * std::pow(R, 2.0 - exponent) / (exponent - 2.0);
  };
  return t;
}

RadialTail bubble_tail(Point center, double amp, double delta, double s) {
  if (!(delta > 0.0)) throw std::invalid_argument("bubble_tail: delta must be positive");
  if (!(s > 0.5)) throw std::invalid_argument("bubble_tail: power must exceed 1/2");
  RadialTail t;
  t.center = center;
  t.profile = [amp, delta, s](double r) { return amp * std::pow(1.0 + delta * delta * r * r, -2.0 * s); };
  t.outer_integral = [amp, delta, s](double R) {
    return kPi * amp / (delta * delta) * std::pow(1.0 + delta * delta * R * R, 1.0 - 2.0 * s) /
           (2.0 * s - 1.0);
  };
  return t;
}

RadialTail profile_tail(Point center, std::function<double(double)> g) {
  RadialTail t;
  t.center = center;
  t.profile = std::move(g);
  return t;
}

double tail_integral(const RadialTail& tail, const Grid2D& grid) {
  const double tol = 1e-9 * grid.h();
  if (std::abs(tail.center.x - grid.center().x) > tol ||
      std::abs(tail.center.y - grid.center().y) > tol) {
    throw std::invalid_argument("tail_integral: tail center must be the grid center");
  }
  const double L = grid.half_width();
  const double R = std::sqrt(2.0) * L;
  boost::math::quadrature::tanh_sinh<double> ts;
  const double band =
      ts.integrate([&](double r) { return tail.profile(r) * outside_arc(r, L); }, L, R);
  double outer = 0.0;
  if (tail.outer_integral) {
    outer = tail.outer_integral(R);
  } else {
    boost::math::quadrature::exp_sinh<double> es;
    outer = 2.0 * kPi * es.integrate([&](double s) { return tail.profile(R + s) * (R + s); });
  }
  return band + outer;
}

double integrate(const ScalarField& f, const RegionMask& region,
                 const std::optional<RadialTail>& tail) {
  require_same_grid(f.grid(), region.grid(), "integrate");
  double sum = 0.0;
  const auto v = f.values();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double w = region.weight(k);
    if (w != 0.0 && f.valid(k)) sum += w * v[k];
  }
  sum *= f.grid().cell_area();
  if (tail) sum += tail_integral(*tail, f.grid());
  return sum;
}

double integrate(const std::function<double(Point)>& f, const RegionMask& region) {
  const Grid2D& g = region.grid();
  double sum = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double w = region.weight(k);
    if (w != 0.0) sum += w * f(g.node(k));
  }
  return sum * g.cell_area();
}

ScalarField fd_laplacian(const ScalarField& u) {
  const Grid2D& g = u.grid();
  const int n = g.n();
  const double inv_h2 = 1.0 / (g.h() * g.h());
  ScalarField out(g, 0.0);
  std::vector<unsigned char> valid(g.size(), 0);
  for (int j = 1; j < n - 1; ++j) {
    for (int i = 1; i < n - 1; ++i) {
      const double c = u.at(i, j);
      out.at(i, j) = (u.at(i + 1, j) + u.at(i - 1, j) + u.at(i, j + 1) + u.at(i, j - 1) - 4.0 * c) * inv_h2;
      valid[g.index(i, j)] = 1;
    }
  }
  out.set_validity(std::move(valid));
  return out;
}

}  // namespace liouville
