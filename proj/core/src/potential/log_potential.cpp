#include "liouville/potential/log_potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liouville/closed_forms/exponents.hpp"
#include "liouville/potential/convolution.hpp"

namespace liouville {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

ScalarField log_potential(const ScalarField& f, const RegionMask& support, const std::optional<SourceTail>& tail) {
  require_same_grid(f.grid(), support.grid(), "log_potential");
  const Grid2D& g = f.grid();
  ScalarField masked(g);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double w = support.weight(k);
    masked[k] = (w != 0.0 && f.valid(k)) ? w * f[k] : 0.0;
  }
  const ConvolutionOperator conv(g, KernelTable::logarithmic(g.h()));
  ScalarField out = conv.apply(masked);
  out *= -1.0 / (2.0 * kPi);
  if (tail) {
    const double inside = log_radial_tail(tail->rho, 0.0, tail->r0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double r = distance(g.node(k), tail->center);
      out[k] += r <= tail->r0 ? inside : log_radial_tail(tail->rho, r, tail->r0);
    }
  }
  return out;
}

ScalarField dirichlet_disk_solve(const ScalarField& f, const RegionMask& disk) {
  require_same_grid(f.grid(), disk.grid(), "dirichlet_disk_solve");
  const auto d = disk.as_disk();
  if (!d) throw std::invalid_argument("dirichlet_disk_solve: mask must carry an exact disk");
  const Grid2D& g = f.grid();
  const Point c = d->center;
  const double a = d->radius;
  const double area = g.cell_area();

  struct Source {
    std::size_t k;
    Point y;
    double mass;
  };
  std::vector<Source> sources;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double w = disk.weight(k);
    if (w != 0.0 && f.valid(k) && f[k] != 0.0) sources.push_back({k, g.node(k), w * f[k] * area});
  }
  const double self_log = log_weight(g.h(), 0.0, 0.0);

  ScalarField u(g, 0.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!disk.flag(k)) continue;
    const Point x = g.node(k);
    const Point xc = x - c;
    const double rx = norm(xc);
    double sum = 0.0;
    if (rx == 0.0) {
      for (const auto& s : sources) {
        const double lg = s.k == k ? self_log : std::log(distance(s.y, x));
        sum += s.mass * (lg - std::log(a));
      }
    } else {
      // |x - c|/a * |y - x*| with x* the reflection of x across the circle.
      const Point xs = c + (a * a / (rx * rx)) * xc;
      const double scale = rx / a;
      for (const auto& s : sources) {
        const double lg = s.k == k ? self_log : std::log(distance(s.y, x));
        sum += s.mass * (lg - std::log(scale * distance(s.y, xs)));
      }
    }
    u[k] = -sum / (2.0 * kPi);
  }
  return u;
}

HlsRatio hls_ratio(const ScalarField& f, const RegionMask& support, double mu, double p) {
  require_mu(mu);
  const double inv_r = 1.0 / p - (2.0 - mu) / 2.0;
  if (!(p > 1.0) || !(inv_r > 0.0)) throw std::invalid_argument("hls_ratio: inadmissible (p, mu)");
  HlsRatio out;
  out.r = 1.0 / inv_r;
  const Grid2D& g = f.grid();
  double fp = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double w = support.weight(k);
    if (w != 0.0 && f.valid(k)) fp += w * std::pow(std::abs(f[k]), p);
  }
  fp = std::pow(fp * g.cell_area(), 1.0 / p);
  if (fp == 0.0) {
    out.degenerate = true;
    return out;
  }
  const ScalarField I = riesz_fft(f, support, RieszConfig{mu});
  double Ir = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) Ir += std::pow(std::abs(I[k]), out.r);
  Ir = std::pow(Ir * g.cell_area(), 1.0 / out.r);
  out.value = Ir / fp;
  return out;
}

}  // namespace liouville
