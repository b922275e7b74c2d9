#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "liouville/experiments/experiments.hpp"

namespace liouville {
namespace {

constexpr double kEightPi = 8.0 * std::numbers::pi;

TEST(Report, RowPassSemantics) {
  ReportRow r{"x", "p", "1", "q", 1.0, 1.05, 0.1};
  EXPECT_TRUE(r.pass());
  r.value = 1.2;
  EXPECT_FALSE(r.pass());
  r.tolerance = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(r.pass());
  r.value = std::nan("");
  EXPECT_FALSE(r.pass());
}

TEST(Report, OneSidedRowsKeepValue) {
  ExperimentReport rep;
  rep.id = "t";
  rep.at_most("p", "1", "gap", 0.3, 0.5);
  rep.at_least("p", "1", "floor", 0.3, 0.5);
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.find("gap")->value, 0.3);
  EXPECT_TRUE(rep.find("gap_excess")->pass());
  EXPECT_FALSE(rep.find("floor_shortfall")->pass());
  EXPECT_NEAR(rep.find("floor_shortfall")->value, 0.2, 1e-15);
  EXPECT_FALSE(rep.passed());
}

TEST(Report, NumberFormatting) {
  EXPECT_EQ(format_number(8.0 * std::numbers::pi), "25.132741");
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(PowerLaw, ExactLaw) {
  const PowerLawFit f = fit_power_law({1, 2, 4}, {1, 0.25, 0.0625});
  EXPECT_NEAR(f.exponent, -2.0, 1e-14);
  EXPECT_NEAR(f.quality, 1.0, 1e-14);
}

TEST(PowerLaw, ConstantData) { EXPECT_NEAR(fit_power_law({1, 2, 3}, {5, 5, 5}).exponent, 0.0, 1e-15); }

TEST(PowerLaw, NoisyLaw) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  std::vector<double> xs, ys;
  for (int i = 0; i < 8; ++i) {
    xs.push_back(std::pow(2.0, i));
    ys.push_back(std::pow(xs.back(), -0.5) * (1.0 + noise(rng)));
  }
  const double e = fit_power_law(xs, ys).exponent;
  EXPECT_GE(e, -0.6);
  EXPECT_LE(e, -0.4);
}

TEST(PowerLaw, Preconditions) {
  EXPECT_THROW(fit_power_law({1}, {1}), std::invalid_argument);
  EXPECT_THROW(fit_power_law({1, 2}, {1, -1}), std::invalid_argument);
}

TEST(Quantization, ConvergesToEightPi) {
  const ExperimentReport rep = run_quantization(1.0, {8, 32, 128}, 1.0, {1.0, 1024});
  const ReportRow* last = rep.find("mass_BR", "128");
  ASSERT_NE(last, nullptr);
  EXPECT_NEAR(last->value, kEightPi, 0.03 * kEightPi);
  EXPECT_LT(rep.find("mass_BR", "8")->value, rep.find("mass_BR", "32")->value);
  EXPECT_TRUE(rep.passed());
}

TEST(Quantization, LimitIndependentOfOrder) {
  const ExperimentReport rep = run_quantization(0.5, {8, 16, 32, 64}, 1.0, {1.0, 512});
  const ReportRow* ext = rep.find("mass_BR", "extrapolated");
  ASSERT_NE(ext, nullptr);
  EXPECT_NEAR(ext->value, kEightPi, 0.03 * kEightPi);
}

TEST(Quantization, MonotoneInConcentration) {
  const ExperimentReport rep = run_quantization(1.5, {4, 8, 16, 32}, 1.0, {1.0, 512});
  double previous = 0.0;
  for (const char* d : {"4", "8", "16", "32"}) {
    const double m = rep.find("mass_BR", d)->value;
    EXPECT_GE(m, previous * (1.0 - 0.005));
    previous = m;
  }
}

TEST(Quantization, SingleScaleIsInconclusive) {
  const ExperimentReport rep = run_quantization(1.0, {16}, 1.0, {1.0, 256});
  EXPECT_TRUE(rep.inconclusive);
  EXPECT_EQ(rep.find("mass_BR", "extrapolated"), nullptr);
}

TEST(Quantization, RejectsUnderResolvedScale) {
  EXPECT_THROW(run_quantization(1.0, {8, 512}, 1.0, {1.0, 256}), std::invalid_argument);
}

TEST(Multibubble, TwoBubblesQuantize) {
  const ExperimentReport rep = run_multibubble(1.0, {{-0.45, 0.0}, {0.45, 0.0}}, {120}, 1.0, {1.0, 1024});
  const ReportRow* total = rep.find("total_mass");
  ASSERT_NE(total, nullptr);
  EXPECT_NEAR(total->value, 2.0 * kEightPi, 0.05 * 2.0 * kEightPi);
  EXPECT_TRUE(rep.find("bookkeeping_closure_excess")->pass());
}

TEST(Multibubble, SingleCenterMatchesQuantization) {
  const ExperimentReport multi = run_multibubble(1.0, {{0.0, 0.0}}, {64}, 1.0, {1.0, 512});
  const ExperimentReport single = run_quantization(1.0, {64}, 1.0, {1.0, 512});
  const double a = multi.find("total_mass")->value;
  const double b = single.find("mass_BR", "64")->value;
  EXPECT_NEAR(a, b, 0.01 * b);
}

TEST(Multibubble, RejectsOverlappingCores) {
  EXPECT_THROW(run_multibubble(1.0, {{-0.01, 0.0}, {0.01, 0.0}}, {20}, 1.0, {1.0, 256}, {0.1}),
               std::invalid_argument);
}

TEST(Rigged, ConstancyIdentity) {
  const ExperimentReport rep = run_rigged(1.0, {4, 10}, {2.0, 512});
  const ReportRow* mean = rep.find("constancy_mean", "10");
  ASSERT_NE(mean, nullptr);
  EXPECT_NEAR(mean->target, -4.44413, 1e-4);
  EXPECT_TRUE(mean->pass());
  EXPECT_TRUE(rep.find("constancy_stddev_excess", "10")->pass());
  EXPECT_TRUE(rep.find("Vk_min_shortfall", "10")->pass());
  EXPECT_LE(rep.find("Vk_max", "10")->value, 3.0);
}

TEST(Rigged, RequiresLargeEnoughGrid) { EXPECT_THROW(run_rigged(1.0, {4, 8}, {1.0, 256}), std::invalid_argument); }

}  // namespace
}  // namespace liouville
