#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "liouville/blowup/analysis.hpp"
#include "liouville/cli/cli.hpp"
#include "liouville/closed_forms/exponents.hpp"
#include "liouville/potential/radial.hpp"

namespace liouville::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEightPi = 8.0 * kPi;
const std::string kId = "verify-core";

std::string num(double v) { return format_number(v); }

// Largest pointwise relative gap between the fast potential and the direct sum
// on a strided set of nodes.
double oracle_deviation(const ScalarField& density, const RegionMask& support, double mu, double fault) {
  RieszConfig fast{mu};
  fast.fault_center_factor = fault;
  const ScalarField pot = riesz_fft(density, support, fast);
  const Grid2D& g = density.grid();
  const int stride = std::max(1, g.n() / 64);
  std::vector<Point> targets;
  std::vector<std::size_t> idx;
  for (int j = 0; j < g.n(); j += stride) {
    for (int i = 0; i < g.n(); i += stride) {
      targets.push_back(g.node(i, j));
      idx.push_back(g.index(i, j));
    }
  }
  const std::vector<double> direct = riesz_direct(density, support, RieszConfig{mu}, targets);
  double worst = 0.0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    worst = std::max(worst, std::abs(pot[idx[t]] - direct[t]) / std::abs(direct[t]));
  }
  return worst;
}

void oracle_rows(ExperimentReport& rep, int n, bool fault) {
  const Grid2D g({0.0, 0.0}, 2.0, n);
  const RegionMask unit = region_mask(g, disk({0.0, 0.0}, 1.0));
  const RegionMask all = whole_grid(g);
  const double factor = fault ? 1.25 : 1.0;
  for (double mu : {0.5, 1.0, 1.5}) {
    const std::string m = num(mu);
    const double lam = lambda_of(mu);
    const ScalarField one(g, 1.0);
    const ScalarField bump = ScalarField::from_function(g, [](Point p) {
      return std::exp(-4.0 * norm2(p - Point{0.3, -0.2})) * (1.0 + 0.5 * std::cos(3.0 * p.x));
    });
    const ScalarField profile =
        sample(bubble_nonlocal({mu, {0.0, 0.0}, 2.0}), g, [lam](double v) { return std::exp(lam * v); });
    rep.at_most("mu", m, "oracle_rel_dev_disk", oracle_deviation(one, unit, mu, factor), 1e-4);
    rep.at_most("mu", m, "oracle_rel_dev_bump", oracle_deviation(bump, all, mu, factor), 1e-4);
    rep.at_most("mu", m, "oracle_rel_dev_bubble", oracle_deviation(profile, all, mu, factor), 1e-4);
  }
}

void symmetry_rows(ExperimentReport& rep, int n) {
  const Grid2D g({0.0, 0.0}, 2.0, n);
  for (double mu : {0.5, 1.0, 1.5}) {
    const KernelTable table = KernelTable::riesz(mu, g.h());
    double gap = 0.0;
    for (int a = -40; a <= 40; ++a) {
      for (int b = -40; b <= 40; ++b) {
        const double w = table.weight(a, b);
        gap = std::max({gap, std::abs(w - table.weight(b, a)), std::abs(w - table.weight(-a, b)),
                        std::abs(w - table.weight(a, -b))});
      }
    }
    rep.at_most("mu", num(mu), "kernel_symmetry_gap", gap, 1e-12);

    // <f, I g> = <g, I f>
    const RegionMask all = whole_grid(g);
    const ScalarField f = ScalarField::from_function(g, [](Point p) { return std::exp(-3.0 * norm2(p - Point{0.5, 0.1})); });
    const ScalarField h = ScalarField::from_function(g, [](Point p) { return 1.0 / (1.0 + norm2(p + Point{0.4, 0.7})); });
    const RieszOperator op(g, RieszConfig{mu});
    const double fg = integrate(f * op.apply(h), all);
    const double gf = integrate(h * op.apply(f), all);
    rep.at_most("mu", num(mu), "operator_symmetry_rel_gap", std::abs(fg - gf) / std::abs(fg), 1e-12);
  }
}

void energy_rows(ExperimentReport& rep) {
  {
    const Grid2D g({0.0, 0.0}, 200.0, 1024);
    const ClosedFormField u = bubble_local({0.0, 0.0}, 1.0);
    const double e = integrate(sample(u, g, [](double v) { return std::exp(v); }), whole_grid(g), *exp_tail(u));
    rep.check("mu", "local", "energy_expU", e, kEightPi, 0.005 * kEightPi);
  }
  for (double mu : {0.5, 1.0, 1.5}) {
    const std::string m = num(mu);
    const double lam = lambda_of(mu);
    const double L = 16.0;
    const Grid2D g({0.0, 0.0}, L, 512);
    const ClosedFormField u = bubble_nonlocal({mu, {0.0, 0.0}, 1.0});
    const RegionMask all = whole_grid(g);
    const double e = integrate(sample(u, g, [](double v) { return std::exp(v); }), all, *exp_tail(u));
    rep.check("mu", m, "energy_expU", e, bubble_energy(mu), 0.01 * bubble_energy(mu));

    const double K = bubble_peak(mu);
    const RadialProfile rho = [K, lam](double r) { return std::pow(K / ((1.0 + r * r) * (1.0 + r * r)), lam); };
    const RegionMask inner = region_mask(g, disk({0.0, 0.0}, L));
    const ScalarField dens = sample(u, g, [lam](double v) { return std::exp(lam * v); });
    ScalarField pot = riesz_fft(dens, inner, RieszConfig{mu});
    pot += riesz_tail_field(SourceTail{{0.0, 0.0}, L, rho}, mu, g);
    const double in = integrate(pot * dens, inner);
    const double out = radial_mass([&](double r) { return rho(r) * riesz_radial(rho, mu, r, 0.0); }, L);
    rep.check("mu", m, "energy_nonlocal", in + out, kEightPi, 0.01 * kEightPi);
  }
}

void transform_rows(ExperimentReport& rep, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::vector<Point> probes;
  while (probes.size() < 200) {
    const Point p{coord(rng), coord(rng)};
    if (norm(p - Point{0.3, -0.4}) > 1e-3 && norm(p - Point{-0.2, 0.5}) > 1e-3) probes.push_back(p);
  }
  for (double mu : {0.5, 1.0, 1.5}) {
    const BubbleParams b{mu, {0.3, -0.4}, 2.5};
    const ClosedFormField closed = bubble_nonlocal(b);
    // Opaque copy so the generic transform path is exercised.
    const ClosedFormField opaque = custom_field("bubble", [closed](Point p) { return closed(p); });

    const double sigma = 0.7;
    const ClosedFormField inverted = kelvin(opaque, b.x0, sigma);
    const ClosedFormField expected = bubble_nonlocal({mu, b.x0, 1.0 / (b.delta * sigma * sigma)});
    const ClosedFormField twice = kelvin(kelvin(opaque, {-0.2, 0.5}, 1.3), {-0.2, 0.5}, 1.3);
    const double s = 3.0;
    const Point y0{0.6, 0.9};
    const ClosedFormField scaled = rescale(opaque, y0, s);
    double kelvin_gap = 0.0, involution_gap = 0.0, rescale_gap = 0.0;
    for (const Point& p : probes) {
      kelvin_gap = std::max(kelvin_gap, std::abs(inverted(p) - expected(p)));
      involution_gap = std::max(involution_gap, std::abs(twice(p) - opaque(p)));
      // rescale(u, y0, s)(x) = u(s (x - y0)) + 2 log s is the bubble centered at y0 + x0 / s with scale s delta.
      const ClosedFormField target = bubble_nonlocal({mu, y0 + (1.0 / s) * b.x0, b.delta * s});
      rescale_gap = std::max(rescale_gap, std::abs(scaled(p) - target(p)));
    }
    rep.at_most("mu", num(mu), "kelvin_fixed_point_gap", kelvin_gap, 1e-12);
    rep.at_most("mu", num(mu), "kelvin_involution_gap", involution_gap, 1e-12);
    rep.at_most("mu", num(mu), "rescale_identity_gap", rescale_gap, 1e-12);
  }
}

void selection_rows(ExperimentReport& rep, std::mt19937_64& rng) {
  const Grid2D g({0.0, 0.0}, 1.0, 64);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> v(g.size());
    const bool rough = t % 2 == 0;
    const double cx = unit(rng) - 0.5, cy = unit(rng) - 0.5, w = 5.0 + 40.0 * unit(rng);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point p = g.node(k);
      v[k] = rough ? 0.01 + 10.0 * unit(rng) : std::exp(-w * norm2(p - Point{cx, cy})) + 1e-3;
    }
    const ScalarField phi(g, std::move(v));
    const Point xt{1.2 * unit(rng) - 0.6, 1.2 * unit(rng) - 0.6};
    const double rho = 0.1 + 0.3 * unit(rng);
    const double a = 0.5 + 3.0 * unit(rng);
    const SelectionResult r = select_bubble(phi, xt, rho, a);
    if (!r.first_inequality || !r.second_inequality) ++failures;
  }
  rep.check("trials", std::to_string(trials), "selection_failures", failures, 0.0, 0.0);
}

void driving_rows(ExperimentReport& rep) {
  const Grid2D g({0.0, 0.0}, 1.0, 256);
  const double rho = 0.8;
  const RegionMask omega = region_mask(g, disk({0.0, 0.0}, rho));
  double worst = kInfinity;
  for (double delta : {1.0, 4.0, 16.0}) {
    const ClosedFormField u = bubble_local({0.0, 0.0}, delta);
    const ScalarField f = sample(u, g, [](double v) { return std::exp(v); });
    for (double ratio : {2.0, 4.0, 8.0, 16.0}) {
      const DrivingEstimate d = driving_estimate_check(u, f, {0.0, 0.0}, rho, rho / ratio, omega);
      worst = std::min(worst, d.lhs - d.rhs);
    }
  }
  const double mu = 1.0;
  for (double delta : {1.0, 4.0, 16.0}) {
    const ClosedFormField u = bubble_nonlocal({mu, {0.0, 0.0}, delta});
    const NonlocalField field(u, 1.0, full_plane_source(u, g, mu), g, RieszConfig{mu});
    for (double ratio : {2.0, 4.0, 8.0, 16.0}) {
      const DrivingEstimate d = driving_estimate_check(u, field.rhs(), {0.0, 0.0}, rho, rho / ratio, omega);
      worst = std::min(worst, d.lhs - d.rhs);
    }
  }
  rep.at_least("configurations", "24", "driving_margin_min", worst, 0.0);
}

void brezis_merle_rows(ExperimentReport& rep, std::mt19937_64& rng) {
  const Grid2D g({0.0, 0.0}, 1.0, 64);
  const RegionMask d = region_mask(g, disk({0.0, 0.0}, 1.0));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ScalarField> fields{ScalarField(g, 1.0)};
  for (int t = 0; t < 10; ++t) {
    const int bumps = 1 + static_cast<int>(4.0 * unit(rng));
    std::vector<std::array<double, 4>> params;
    for (int b = 0; b < bumps; ++b) {
      const double r = 0.8 * std::sqrt(unit(rng)), th = 2.0 * kPi * unit(rng);
      params.push_back({r * std::cos(th), r * std::sin(th), 0.05 + 0.3 * unit(rng), 0.2 + 5.0 * unit(rng)});
    }
    fields.push_back(ScalarField::from_function(g, [params](Point p) {
      double s = 0.0;
      for (const auto& b : params) s += b[3] * std::exp(-norm2(p - Point{b[0], b[1]}) / (b[2] * b[2]));
      return s;
    }));
  }
  for (double delta : {2.0 * kPi, kPi}) {
    double worst_ratio = 0.0;
    for (std::size_t t = 0; t < fields.size(); ++t) {
      const BrezisMerle bm = brezis_merle_check(fields[t], d, delta);
      if (t == 0) {
        rep.at_most("delta", num(delta), "bm_lhs_constant", bm.lhs, bm.bound);
      }
      worst_ratio = std::max(worst_ratio, bm.lhs / bm.bound);
    }
    rep.at_most("delta", num(delta), "bm_worst_lhs_over_bound", worst_ratio, 1.0);
  }
}

}  // namespace

ExperimentReport verify_core(const VerifyOptions& options) {
  if (options.n < 16) throw ConfigError("verify-core needs n >= 16");
  ExperimentReport rep;
  rep.id = kId;
  std::mt19937_64 rng(options.seed);
  oracle_rows(rep, options.n, options.kernel_fault);
  symmetry_rows(rep, options.n);
  energy_rows(rep);
  transform_rows(rep, rng);
  selection_rows(rep, rng);
  driving_rows(rep);
  brezis_merle_rows(rep, rng);
  return rep;
}

}  // namespace liouville::cli
