#include "liouville/potential/riesz.hpp"

#include <cmath>
#include <stdexcept>

#include "liouville/closed_forms/exponents.hpp"

namespace liouville {

namespace {

KernelTable fast_table(const Grid2D& grid, const RieszConfig& cfg) {
  KernelTable t = KernelTable::riesz(cfg.mu, grid.h(), cfg.singular_rule);
  if (cfg.fault_center_factor != 1.0) t.perturb_center(cfg.fault_center_factor);
  return t;
}

ScalarField weighted(const ScalarField& density, const RegionMask& support) {
  require_same_grid(density.grid(), support.grid(), "riesz");
  ScalarField out(density.grid());
  for (std::size_t k = 0; k < out.grid().size(); ++k) {
    const double w = support.weight(k);
    out[k] = (w != 0.0 && density.valid(k)) ? w * density[k] : 0.0;
  }
  return out;
}

bool node_offset(const Grid2D& g, Point p, int& i, int& j) {
  const auto [u, v] = g.lattice_coords(p);
  const double ru = std::round(u), rv = std::round(v);
  if (std::abs(u - ru) > 1e-9 || std::abs(v - rv) > 1e-9) return false;
  if (ru < 0 || rv < 0 || ru >= g.n() || rv >= g.n()) return false;
  i = static_cast<int>(ru);
  j = static_cast<int>(rv);
  return true;
}

}  // namespace

void validate(const RieszConfig& cfg) {
  require_mu(cfg.mu);
  if (cfg.padding_factor < 2) throw std::invalid_argument("RieszConfig: padding_factor must be at least 2");
}

RieszOperator::RieszOperator(const Grid2D& grid, const RieszConfig& cfg)
    : cfg_((validate(cfg), cfg)), table_(fast_table(grid, cfg)), conv_(grid, table_, cfg.padding_factor) {}

ScalarField RieszOperator::apply(const ScalarField& density) const { return conv_.apply(density); }

ScalarField RieszOperator::apply(const ScalarField& density, const RegionMask& support) const {
  return conv_.apply(weighted(density, support));
}

ScalarField riesz_fft(const ScalarField& density, const RieszConfig& cfg) {
  return RieszOperator(density.grid(), cfg).apply(density);
}

ScalarField riesz_fft(const ScalarField& density, const RegionMask& support, const RieszConfig& cfg) {
  return RieszOperator(density.grid(), cfg).apply(density, support);
}

std::vector<double> riesz_direct(const ScalarField& density, const RegionMask& support, const RieszConfig& cfg,
                                 const std::vector<Point>& targets, const std::optional<SourceTail>& tail,
                                 DirectDiagnostics* diagnostics) {
  validate(cfg);
  require_same_grid(density.grid(), support.grid(), "riesz_direct");
  const Grid2D& g = density.grid();
  const int n = g.n();
  const double area = g.cell_area();

  struct Source {
    int i, j;
    double mass;
  };
  std::vector<Source> sources;
  bool negative = false;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = g.index(i, j);
      const double w = support.weight(k);
      if (w == 0.0 || !density.valid(k)) continue;
      const double v = density[k];
      if (v < 0.0) negative = true;
      if (v != 0.0) sources.push_back({i, j, w * v * area});
    }
  }
  if (diagnostics) diagnostics->negative_density = negative;

  std::vector<double> out(targets.size(), 0.0);
  std::vector<double> dense;
  const KernelTable table = KernelTable::riesz(cfg.mu, g.h(), cfg.singular_rule);
  const int m = 2 * n - 1;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const Point x = targets[t];
    if (!std::isfinite(x.x) || !std::isfinite(x.y)) throw std::invalid_argument("riesz_direct: non-finite target");
    double sum = 0.0;
    int ti = 0, tj = 0;
    if (node_offset(g, x, ti, tj)) {
      if (dense.empty() && !sources.empty()) dense = table.dense(n);
      for (const auto& s : sources) {
        sum += s.mass * dense[static_cast<std::size_t>(tj - s.j + n - 1) * m + (ti - s.i + n - 1)];
      }
    } else {
      const auto [u, v] = g.lattice_coords(x);
      for (const auto& s : sources) {
        sum += s.mass * riesz_weight(cfg.mu, g.h(), u - s.i, v - s.j, cfg.singular_rule);
      }
    }
    if (tail) sum += riesz_tail_at(*tail, cfg.mu, x);
    out[t] = sum;
  }
  return out;
}

double riesz_tail_at(const SourceTail& tail, double mu, Point x) {
  return riesz_radial(tail.rho, mu, distance(x, tail.center), tail.r0);
}

ScalarField riesz_tail_field(const SourceTail& tail, double mu, const Grid2D& grid) {
  double r_max = 0.0;
  for (Point c : {Point{grid.xmin(), grid.ymin()}, Point{grid.xmax(), grid.ymin()}, Point{grid.xmin(), grid.ymax()},
                  Point{grid.xmax(), grid.ymax()}}) {
    r_max = std::max(r_max, distance(c, tail.center));
  }
  r_max = std::max(r_max, tail.r0) * (1.0 + 1e-9);
  const RadialInterpolant interp([&](double r) { return riesz_radial(tail.rho, mu, r, tail.r0); }, tail.r0, r_max);
  return ScalarField::from_function(grid, [&](Point p) { return interp(distance(p, tail.center)); });
}

}  // namespace liouville
