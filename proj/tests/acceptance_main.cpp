// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "liouville/blowup/analysis.hpp"
#include "liouville/cli/cli.hpp"
#include "liouville/closed_forms/exponents.hpp"
#include "liouville/experiments/experiments.hpp"

using namespace liouville;

namespace {

constexpr double kEightPi = 8.0 * std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("criterion %-3s %-4s %s: %s\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) { return format_number(v); }

// All rows whose quantity starts with one of the prefixes pass; the detail lists their values.
Outcome rows_pass(const ExperimentReport& rep, const std::vector<std::string>& prefixes) {
  Outcome o{true, ""};
  int matched = 0;
  for (const auto& r : rep.rows) {
    bool hit = false;
    for (const auto& p : prefixes) hit = hit || r.quantity.rfind(p, 0) == 0;
    if (!hit) continue;
    ++matched;
    if (!r.pass()) {
      o.pass = false;
      o.detail += r.quantity + "[" + r.param_value + "]=" + fmt(r.value) + " ";
    }
  }
  if (matched == 0) return {false, "no rows"};
  if (o.pass) o.detail = std::to_string(matched) + " rows within tolerance";
  return o;
}

std::string row_values(const ExperimentReport& rep, const std::string& quantity) {
  std::string out;
  for (const auto& r : rep.rows) {
    if (r.quantity == quantity) out += r.param_value + ":" + fmt(r.value) + " ";
  }
  return out;
}

}  // namespace

int main() {
  const ExperimentReport core128 = cli::verify_core({128, 20240501, false});
  const ExperimentReport core256 = cli::verify_core({256, 20240501, false});

  report("1", "local energy", [&] {
    const ReportRow* r = core128.find("energy_expU", "local");
    return Outcome{r->pass(), "integral of e^U0 = " + fmt(r->value) + " vs 8 pi, tol 0.5%"};
  });

  report("2", "nonlocal energies", [&] {
    Outcome o = rows_pass(core128, {"energy_expU", "energy_nonlocal"});
    o.detail = "e^U " + row_values(core128, "energy_expU") + "| mass " + row_values(core128, "energy_nonlocal");
    return o;
  });

  report("3", "oracle equivalence", [&] {
    const Outcome a = rows_pass(core128, {"oracle_rel_dev"});
    const Outcome b = rows_pass(core256, {"oracle_rel_dev"});
    double worst = 0.0;
    for (const auto* rep : {&core128, &core256}) {
      for (const auto& r : rep->rows) {
        if (r.quantity.rfind("oracle_rel_dev", 0) == 0 && r.quantity.find("excess") == std::string::npos) {
          worst = std::max(worst, r.value);
        }
      }
    }
    return Outcome{a.pass && b.pass, "max relative deviation " + fmt(worst) + " at n=128,256 (limit 1e-4)"};
  });

  report("4", "PDE residuals", [&] {
    const double mu = 1.0;
    const ClosedFormField U = bubble_nonlocal({mu, {0.0, 0.0}, 1.0});
    std::vector<double> rel;
    for (int n : {128, 256}) {
      const Grid2D g = make_grid({0.0, 0.0}, 8.0, n);
      const Source src = full_plane_source(U, g, mu);
      const RegionMask b2 = region_mask(g, disk({0.0, 0.0}, 2.0));
      rel.push_back(sup_abs(nonlocal_residual(U, 1.0, src, g, mu), b2));
    }
    const double factor = rel[0] / rel[1];
    const ClosedFormField U0 = bubble_local({0.0, 0.0}, 1.0);
    std::vector<double> hs, sups;
    for (int n : {64, 128, 256}) {
      const Grid2D g = make_grid({0.0, 0.0}, 4.0, n);
      hs.push_back(g.h());
      sups.push_back(sup_abs(local_residual(U0, g), region_mask(g, disk({0.0, 0.0}, 2.0))));
    }
    const double order = fit_power_law(hs, sups).exponent;
    return Outcome{factor >= 1.5 && order >= 1.8,
                   "nonlocal reduction " + fmt(factor) + " (>= 1.5), local order " + fmt(order) + " (>= 1.8)"};
  });

  report("5", "quantization", [&] {
    cli::RunConfig q;
    const ExperimentReport single = cli::execute(q);
    const ReportRow* ext = single.find("mass_BR", "extrapolated");
    const ExperimentReport two = run_multibubble(1.0, {{-0.45, 0.0}, {0.45, 0.0}}, {120}, 1.0, {1.0, 1024});
    const ReportRow* total = two.find("total_mass");
    const bool ok = ext->pass() && total->pass();
    return Outcome{ok, "single " + fmt(ext->value) + " vs 8 pi (3%), pair " + fmt(total->value) + " vs 16 pi (5%)"};
  });

  report("6", "interaction decay", [&] {
    const ExperimentReport rep = run_interaction_decay(1.0, 40.0, {1, 2, 4, 8}, 0.25);
    const ReportRow* e = rep.find("decay_exponent");
    return Outcome{e->pass(), "fitted exponent " + fmt(e->value) + " vs mu/2 = 0.5 (20%); masses " +
                                  row_values(rep, "interaction_mass")};
  });

  const ExperimentReport rigged = run_rigged(1.0, {4, 8, 16, 32}, {2.0, 1024});
  report("7a", "rigged energy slope", [&] {
    const ReportRow* s = rigged.find("F_L1_slope", "all");
    return Outcome{s->pass(), "slope " + fmt(s->value) + " vs -2 (10%); L1 " + row_values(rigged, "F_L1_ball")};
  });
  report("7b", "rigged coefficient floor", [&] {
    Outcome o = rows_pass(rigged, {"Vk_min_shortfall"});
    o.detail = "min V_k " + row_values(rigged, "Vk_min") + "(>= 1 - 1e-3)";
    return o;
  });
  report("7c", "rigged constancy", [&] {
    Outcome o = rows_pass(rigged, {"constancy_mean", "constancy_stddev_excess"});
    o.detail = "mean " + row_values(rigged, "constancy_mean") + "| stddev " + row_values(rigged, "constancy_stddev");
    return o;
  });

  report("8", "Brezis-Merle", [&] {
    Outcome o = rows_pass(core128, {"bm_"});
    o.detail = "f=1 lhs " + row_values(core128, "bm_lhs_constant") + "| worst lhs/bound " +
               row_values(core128, "bm_worst_lhs_over_bound");
    return o;
  });

  report("9", "property suites", [&] {
    const Outcome props = rows_pass(core128, {"selection_failures", "kelvin_", "rescale_", "driving_margin_min"});
    const ClassifierParams params;
    bool stable = true;
    std::string labels;
    for (int n : {512, 1024}) {
      const Grid2D g = make_grid({0.0, 0.0}, 0.25, n);
      const RegionMask omega = region_mask(g, disk({0.0, 0.0}, 0.2));
      std::vector<ClosedFormField> zero, sinking, bubbles;
      for (int k = 5; k <= 8; ++k) {
        zero.push_back(constant(0.0));
        sinking.push_back(constant(-std::pow(2.0, k - 2)));
        bubbles.push_back(bubble_nonlocal({1.0, {0.0, 0.0}, std::pow(2.0, k)}));
      }
      const auto a = classify_alternative(zero, omega, params);
      const auto b = classify_alternative(sinking, omega, params);
      const auto c = classify_alternative(bubbles, omega, params);
      const bool mass_ok = c.masses.size() == 1 && std::abs(c.masses[0] - kEightPi) <= 0.05 * kEightPi;
      stable = stable && a.verdict == Alternative::A1 && b.verdict == Alternative::A2 &&
               c.verdict == Alternative::A3 && !c.inconclusive && mass_ok;
      labels += "n=" + std::to_string(n) + ":" + to_string(a.verdict) + "/" + to_string(b.verdict) + "/" +
                to_string(c.verdict) + (c.masses.empty() ? "" : "(" + fmt(c.masses[0]) + ")") + " ";
    }
    return Outcome{props.pass && stable, props.detail + "; classifier " + labels};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
