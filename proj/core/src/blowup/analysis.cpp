#include "liouville/blowup/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liouville/errors.hpp"
#include "liouville/field/quadrature.hpp"
#include "liouville/potential/log_potential.hpp"

namespace liouville {

namespace {

constexpr double kPi = std::numbers::pi;

ScalarField raw_sample(const ClosedFormField& u, const Grid2D& grid) {
  return ScalarField::from_function(grid, [&](Point p) { return u(p); });
}

struct Candidate {
  Point x;
  double value;
};

// Local maxima above `floor` over the flagged nodes, merged when within 2h.
std::vector<Candidate> local_maxima(const ScalarField& u, const RegionMask& mask, double floor) {
  const Grid2D& g = u.grid();
  const int n = g.n();
  std::vector<std::pair<std::size_t, double>> raw;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = g.index(i, j);
      if (!mask.flag(k) || !(u[k] > floor)) continue;
      bool peak = true;
      for (int dj = -1; dj <= 1 && peak; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const int a = i + di, b = j + dj;
          if ((di == 0 && dj == 0) || a < 0 || b < 0 || a >= n || b >= n) continue;
          const std::size_t kk = g.index(a, b);
          if (mask.flag(kk) && u[kk] > u[k]) {
            peak = false;
            break;
          }
        }
      }
      if (peak) raw.emplace_back(k, u[k]);
    }
  }
  std::vector<Candidate> out;
  std::vector<int> count;
  const double join = 2.0 * g.h() * (1.0 + 1e-12);
  for (const auto& [k, v] : raw) {
    const Point p = g.node(k);
    bool merged = false;
    for (std::size_t c = 0; c < out.size(); ++c) {
      const Point centroid = (1.0 / count[c]) * out[c].x;
      if (distance(centroid, p) <= join) {
        out[c].x = out[c].x + p;
        out[c].value = std::max(out[c].value, v);
        ++count[c];
        merged = true;
        break;
      }
    }
    if (!merged) {
      out.push_back({p, v});
      count.push_back(1);
    }
  }
  for (std::size_t c = 0; c < out.size(); ++c) out[c].x = (1.0 / count[c]) * out[c].x;
  return out;
}

}  // namespace

ScalarField nonlocal_residual(const ClosedFormField& u, const Coefficient& V, const Source& src,
                              const Grid2D& eval_grid, double mu) {
  const NonlocalField nf(u, V, src, eval_grid, RieszConfig{mu});
  ScalarField lap = fd_laplacian(sample(u, eval_grid));
  lap *= -1.0;
  lap -= nf.rhs();
  return lap;
}

ScalarField local_residual(const ClosedFormField& u, const Grid2D& grid) {
  ScalarField lap = fd_laplacian(sample(u, grid));
  lap *= -1.0;
  lap -= sample(u, grid, [](double v) { return std::exp(v); });
  return lap;
}

double region_mass(const ClosedFormField& u, const Coefficient& V, const Source& src, const RegionMask& target,
                   double mu) {
  require_same_grid(src.mask.grid(), target.grid(), "region_mass");
  return NonlocalField(u, V, src, target.grid(), RieszConfig{mu}).mass(target);
}

double interaction_mass(const ClosedFormField& u, const Coefficient& V, const RegionMask& src,
                        const RegionMask& target, double mu) {
  require_same_grid(src.grid(), target.grid(), "interaction_mass");
  if (overlaps(src, target)) throw std::invalid_argument("interaction_mass: source and target overlap");
  if (src.empty() || target.empty()) return 0.0;
  const Grid2D& g = src.grid();
  const double lam = lambda_of(mu);

  struct Cell {
    int i, j;
    double m;
  };
  auto cells = [&](const RegionMask& mask, bool with_v) {
    std::vector<Cell> out;
    for (int j = 0; j < g.n(); ++j) {
      for (int i = 0; i < g.n(); ++i) {
        const std::size_t k = g.index(i, j);
        const double w = mask.weight(k);
        if (w == 0.0) continue;
        double m = w * std::exp(lam * u(g.node(k))) * g.cell_area();
        if (with_v) m *= std::holds_alternative<double>(V) ? std::get<double>(V) : std::get<ScalarField>(V)[k];
        out.push_back({i, j, m});
      }
    }
    return out;
  };
  const auto a = cells(src, false);
  const auto b = cells(target, true);
  // Small balls: pair sum with the fast path's own table weights. Otherwise FFT.
  if (static_cast<double>(a.size()) * static_cast<double>(b.size()) > 2e8) {
    return NonlocalField(u, V, source_region(src), g, RieszConfig{mu}).mass(target);
  }
  const KernelTable table = KernelTable::riesz(mu, g.h());
  double sum = 0.0;
  for (const auto& t : b) {
    double pot = 0.0;
    for (const auto& s : a) pot += s.m * table.weight(t.i - s.i, t.j - s.j);
    sum += t.m * pot;
  }
  return sum;
}

double mass_threshold(double p, double mu) {
  const ExponentRelations e = exponents(mu, p);
  if (std::isinf(p)) return 4.0 * kPi;
  return 4.0 * kPi * (1.0 - 1.0 / (2.0 * e.lambda * p));
}

std::string to_string(Alternative a) {
  switch (a) {
    case Alternative::A1: return "A1";
    case Alternative::A2: return "A2";
    case Alternative::A3: return "A3";
    case Alternative::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

AlternativeVerdict classify_alternative(const std::vector<ClosedFormField>& family, const RegionMask& omega,
                                        const ClassifierParams& params) {
  if (family.size() < 3) throw std::invalid_argument("classify_alternative: need at least 3 members");
  if (omega.empty()) throw std::invalid_argument("classify_alternative: empty region");
  const Grid2D& g = omega.grid();
  AlternativeVerdict out;
  std::vector<ScalarField> sampled;
  sampled.reserve(family.size());
  double sup_abs_all = 0.0;
  for (const auto& u : family) {
    sampled.push_back(raw_sample(u, g));
    out.sups.push_back(max_over(sampled.back(), omega));
    sup_abs_all = std::max({sup_abs_all, std::abs(out.sups.back()), std::abs(min_over(sampled.back(), omega))});
  }
  const std::size_t last = family.size() - 1;
  const auto& s = out.sups;

  if (sup_abs_all <= params.bound) {
    out.verdict = Alternative::A1;
    out.reason = "every member bounded in absolute value by M";
    return out;
  }
  if (s[last] < -params.drop_threshold && s[last] < s[last - 1] && s[last - 1] < s[last - 2]) {
    out.verdict = Alternative::A2;
    out.reason = "sup below -T and decreasing over the last three members";
    return out;
  }

  // Blow-up points: local maxima of the last member above M that persist, with
  // increasing values, as local maxima of the two members before it.
  const auto tail_last = local_maxima(sampled[last], omega, params.bound);
  const auto tail_mid = local_maxima(sampled[last - 1], omega, -std::numeric_limits<double>::infinity());
  const auto tail_first = local_maxima(sampled[last - 2], omega, -std::numeric_limits<double>::infinity());
  const double join = 2.0 * g.h() * (1.0 + 1e-12);
  auto match = [&](const std::vector<Candidate>& cs, Point p) -> const Candidate* {
    for (const auto& c : cs) {
      if (distance(c.x, p) <= join) return &c;
    }
    return nullptr;
  };
  for (const auto& c : tail_last) {
    const Candidate* m = match(tail_mid, c.x);
    const Candidate* f = m ? match(tail_first, m->x) : nullptr;
    if (m && f && c.value > m->value && m->value > f->value) out.blowup_points.push_back(c.x);
  }
  if (out.blowup_points.empty()) {
    out.verdict = Alternative::Inconclusive;
    out.inconclusive = true;
    out.reason = "unbounded but no persistent blow-up point";
    return out;
  }

  out.verdict = Alternative::A3;
  const NonlocalField nf(family[last], params.V, source_region(omega), g, RieszConfig{params.mu});
  const double threshold = mass_threshold(params.p, params.mu);
  for (const Point& x : out.blowup_points) {
    const double radius = 8.0 * std::exp(-0.5 * family[last](x)) * params.growth;
    const double m = nf.mass(mask_intersection(region_mask(g, disk(x, radius)), omega));
    out.masses.push_back(m);
    if (m < threshold * (1.0 - params.mass_tolerance)) {
      out.inconclusive = true;
      out.reason = "blow-up mass below the threshold";
    }
  }
  if (!out.inconclusive) out.reason = "persistent blow-up points with masses above the threshold";
  return out;
}

SelectionResult select_bubble(const ScalarField& phi, Point x_tilde, double rho, double a) {
  const Grid2D& g = phi.grid();
  if (!(rho > 0.0) || !(a > 0.0)) throw std::invalid_argument("select_bubble: rho and a must be positive");
  const auto [ci, cj] = g.nearest_node(x_tilde);
  const Point xt = g.node(ci, cj);
  const std::size_t kt = g.index(ci, cj);

  std::size_t best = kt;
  double best_psi = -1.0;
  double best_dist = 0.0;
  std::vector<std::size_t> ball;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double d = distance(g.node(k), xt);
    if (!(d < rho)) continue;
    ball.push_back(k);
    if (!(phi[k] > 0.0)) throw std::invalid_argument("select_bubble: phi must be positive on the ball");
    const double psi = std::pow(rho - d, a) * phi[k];
    // Ties: smaller distance to the center, then storage order.
    if (psi > best_psi || (psi == best_psi && d < best_dist)) {
      best = k;
      best_psi = psi;
      best_dist = d;
    }
  }
  SelectionResult out;
  out.x = g.node(best);
  out.x_tilde = xt;
  out.r = 0.5 * (rho - best_dist);
  out.phi_x = phi[best];
  out.phi_x_tilde = phi[kt];
  double ball_max = 0.0;
  for (std::size_t k : ball) {
    if (distance(g.node(k), out.x) < out.r) ball_max = std::max(ball_max, phi[k]);
  }
  out.ball_max = ball_max;
  // Relative slack for the rounding in the powers; the comparisons are exact otherwise.
  const double slack = 1.0 + 1e-12;
  out.first_inequality = out.phi_x * slack >= std::pow(rho / (2.0 * out.r), a) * out.phi_x_tilde;
  out.second_inequality = out.phi_x * slack >= std::pow(2.0, -a) * ball_max;
  return out;
}

double sup_inf_functional(const ClosedFormField& u, const RegionMask& K, const RegionMask& omega, double C1) {
  require_same_grid(K.grid(), omega.grid(), "sup_inf_functional");
  if (K.count() == 0 || omega.count() == 0) throw std::invalid_argument("sup_inf_functional: empty mask");
  for (std::size_t k = 0; k < K.grid().size(); ++k) {
    if (K.flag(k) && !omega.flag(k)) throw std::invalid_argument("sup_inf_functional: K must lie inside omega");
  }
  const ScalarField s = sample(u, omega.grid());
  return max_over(s, K) + C1 * min_over(s, omega);
}

DrivingEstimate driving_estimate_check(const ClosedFormField& u, const ScalarField& f, Point x0, double rho,
                                       double r, const RegionMask& omega) {
  if (!(r > 0.0) || !(r < rho)) throw std::invalid_argument("driving_estimate_check: need 0 < r < rho");
  require_same_grid(f.grid(), omega.grid(), "driving_estimate_check");
  DrivingEstimate out;
  out.lhs = u(x0) - min_over(sample(u, omega.grid()), omega);
  const RegionMask ball = region_mask(f.grid(), disk(x0, r));
  out.rhs = integrate(f, ball) * std::log(rho / r) / (2.0 * kPi);
  return out;
}

DrivingEstimate driving_estimate_check(const ClosedFormField& u, const ClosedFormField& f, Point x0, double rho,
                                       double r, const RegionMask& omega) {
  return driving_estimate_check(u, sample(f, omega.grid()), x0, rho, r, omega);
}

BrezisMerle brezis_merle_check(const ScalarField& f, const RegionMask& disk_mask, double delta) {
  if (!(delta > 0.0 && delta < 4.0 * kPi)) throw std::invalid_argument("brezis_merle_check: delta must lie in (0, 4 pi)");
  const auto d = disk_mask.as_disk();
  if (!d) throw std::invalid_argument("brezis_merle_check: mask must carry an exact disk");
  const Grid2D& g = f.grid();
  double l1 = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (disk_mask.weight(k) == 0.0) continue;
    if (f[k] < 0.0) throw std::invalid_argument("brezis_merle_check: f must be nonnegative");
    l1 += disk_mask.weight(k) * f[k];
  }
  l1 *= g.cell_area();
  if (!(l1 > 0.0)) throw std::invalid_argument("brezis_merle_check: f vanishes on the disk");
  const ScalarField u = dirichlet_disk_solve(f, disk_mask);
  const double c = (4.0 * kPi - delta) / l1;
  BrezisMerle out;
  out.lhs = integrate(u.map([c](double v) { return std::exp(c * std::abs(v)); }), disk_mask);
  out.bound = 4.0 * kPi * kPi / delta * (4.0 * d->radius * d->radius);
  return out;
}

}  // namespace liouville
