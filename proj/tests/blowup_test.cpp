#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "liouville/blowup/analysis.hpp"
#include "liouville/closed_forms/exponents.hpp"
#include "liouville/experiments/report.hpp"

namespace liouville {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEightPi = 8.0 * kPi;

TEST(MassThreshold, Values) {
  EXPECT_NEAR(mass_threshold(kInfinity, 1.0), 4.0 * kPi, 1e-14);
  EXPECT_NEAR(mass_threshold(2.0, 1.5), 4.0 * kPi * 0.6, 1e-13);
  EXPECT_THROW(mass_threshold(1.0, 1.0), std::invalid_argument);
}

TEST(RegionMass, NonnegativeAndMonotone) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 128);
  const ClosedFormField u = bubble_nonlocal({1.0, {0.1, 0.0}, 6.0});
  const Source src = source_region(whole_grid(g));
  const NonlocalField field(u, 1.0, src, g, RieszConfig{1.0});
  double previous = 0.0;
  for (double r : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    const double m = field.mass(region_mask(g, disk({0.1, 0.0}, r)));
    EXPECT_GE(m, previous);
    previous = m;
  }
  EXPECT_GE(region_mass(u, 1.0, src, region_mask(g, box(0.5, 0.9, -0.9, -0.5)), 1.0), 0.0);
}

TEST(RegionMass, VanishingDensity) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 64);
  EXPECT_EQ(region_mass(constant(-1e4), 1.0, source_region(whole_grid(g)), whole_grid(g), 1.0), 0.0);
}

TEST(RegionMass, ConcentratedBubbleOnUnitDisk) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 1024);
  const RegionMask b1 = region_mask(g, disk({0.0, 0.0}, 1.0));
  const double m50 = region_mass(bubble_nonlocal({1.0, {0.0, 0.0}, 50.0}), 1.0, source_region(b1), b1, 1.0);
  const double m200 = region_mass(bubble_nonlocal({1.0, {0.0, 0.0}, 200.0}), 1.0, source_region(b1), b1, 1.0);
  EXPECT_NEAR(m50, kEightPi, 0.03 * kEightPi);
  EXPECT_NEAR(m200, kEightPi, 0.03 * kEightPi);
  EXPECT_GE(m200, m50 * (1.0 - 0.005));
}

TEST(InteractionMass, EmptyAndOverlap) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 64);
  const ClosedFormField u = bubble_nonlocal({1.0, {0.0, 0.0}, 4.0});
  const RegionMask a = region_mask(g, disk({-0.4, 0.0}, 0.2));
  EXPECT_EQ(interaction_mass(u, 1.0, region_mask(g, disk({5.0, 5.0}, 0.1)), a, 1.0), 0.0);
  EXPECT_THROW(interaction_mass(u, 1.0, a, region_mask(g, disk({-0.3, 0.0}, 0.2)), 1.0), std::invalid_argument);
}

TEST(InteractionMass, SymmetricBetweenEqualBubbles) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 128);
  const ClosedFormField u =
      superposition({bubble_nonlocal({1.0, {-0.5, 0.0}, 20.0}), bubble_nonlocal({1.0, {0.5, 0.0}, 20.0})});
  const RegionMask a = region_mask(g, disk({-0.5, 0.0}, 0.2));
  const RegionMask b = region_mask(g, disk({0.5, 0.0}, 0.2));
  const double ab = interaction_mass(u, 1.0, a, b, 1.0);
  EXPECT_GT(ab, 0.0);
  EXPECT_NEAR(ab, interaction_mass(u, 1.0, b, a, 1.0), 1e-12 * ab);
}

TEST(Residual, LocalBubbleSecondOrder) {
  const ClosedFormField u = bubble_local({0.0, 0.0}, 1.0);
  std::vector<double> sups, hs;
  for (int n : {64, 128, 256}) {
    const Grid2D g = make_grid({0.0, 0.0}, 4.0, n);
    sups.push_back(sup_abs(local_residual(u, g), region_mask(g, disk({0.0, 0.0}, 2.0))));
    hs.push_back(g.h());
  }
  EXPECT_GE(fit_power_law(hs, sups).exponent, 1.8);
}

TEST(Residual, NonlocalBubbleSmallAndDecreasing) {
  const double mu = 1.0;
  const ClosedFormField u = bubble_nonlocal({mu, {0.0, 0.0}, 1.0});
  std::vector<double> rel;
  for (int n : {256, 512}) {
    const Grid2D g = make_grid({0.0, 0.0}, 8.0, n);
    const Source src = full_plane_source(u, g, mu);
    const NonlocalField field(u, 1.0, src, g, RieszConfig{mu});
    const RegionMask b2 = region_mask(g, disk({0.0, 0.0}, 2.0));
    rel.push_back(sup_abs(nonlocal_residual(u, 1.0, src, g, mu), b2) / sup_abs(field.rhs(), b2));
  }
  EXPECT_LE(rel[0], 0.02);
  EXPECT_LT(rel[1], rel[0]);
}

class Classifier : public ::testing::TestWithParam<int> {};

TEST_P(Classifier, CanonicalFamilies) {
  const Grid2D g = make_grid({0.0, 0.0}, 0.25, GetParam());
  const RegionMask omega = region_mask(g, disk({0.0, 0.0}, 0.2));
  const ClassifierParams params;

  std::vector<ClosedFormField> zero, sinking, bubbles;
  // Bubble scales 2^5 .. 2^8 so the last peak exceeds M = 10; -k for k = 8 .. 64 drops below -T.
  for (int k = 5; k <= 8; ++k) {
    zero.push_back(constant(0.0));
    sinking.push_back(constant(-std::pow(2.0, k - 2)));
    bubbles.push_back(bubble_nonlocal({1.0, {0.0, 0.0}, std::pow(2.0, k)}));
  }
  EXPECT_EQ(classify_alternative(zero, omega, params).verdict, Alternative::A1);
  EXPECT_EQ(classify_alternative(sinking, omega, params).verdict, Alternative::A2);
  const AlternativeVerdict v = classify_alternative(bubbles, omega, params);
  EXPECT_EQ(v.verdict, Alternative::A3) << v.reason;
  EXPECT_FALSE(v.inconclusive) << v.reason;
  ASSERT_EQ(v.blowup_points.size(), 1u);
  EXPECT_LE(norm(v.blowup_points[0]), 2.0 * g.h());
  ASSERT_EQ(v.masses.size(), 1u);
  EXPECT_NEAR(v.masses[0], kEightPi, 0.05 * kEightPi);
}

INSTANTIATE_TEST_SUITE_P(Refinement, Classifier, ::testing::Values(512, 1024));

TEST(Classifier, NeedsThreeMembers) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 32);
  EXPECT_THROW(classify_alternative({constant(0.0), constant(0.0)}, whole_grid(g), {}), std::invalid_argument);
}

TEST(Selection, BubblePeakSelectsCenter) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 64);
  const ScalarField phi = sample(bubble_local({0.0, 0.0}, 1.0), g, [](double v) { return std::exp(v); });
  const SelectionResult r = select_bubble(phi, {0.0, 0.0}, 1.0, 2.0);
  EXPECT_EQ(r.x, r.x_tilde);
  EXPECT_DOUBLE_EQ(r.r, 0.5);
  EXPECT_TRUE(r.first_inequality);
  EXPECT_TRUE(r.second_inequality);
}

TEST(Selection, ConstantFieldPicksCenter) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 32);
  const SelectionResult r = select_bubble(ScalarField(g, 1.0), {0.3, -0.2}, 0.5, 1.5);
  EXPECT_EQ(r.x, r.x_tilde);
  EXPECT_DOUBLE_EQ(r.r, 0.25);
  EXPECT_TRUE(r.first_inequality);
  EXPECT_TRUE(r.second_inequality);
}

TEST(Selection, RandomFieldsSatisfyBothInequalities) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 48);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(g.size());
    for (double& x : v) x = 1e-3 + std::pow(unit(rng), 3.0) * 100.0;
    const ScalarField phi(g, std::move(v));
    const SelectionResult r =
        select_bubble(phi, {unit(rng) - 0.5, unit(rng) - 0.5}, 0.05 + 0.4 * unit(rng), 0.25 + 4.0 * unit(rng));
    EXPECT_TRUE(r.first_inequality) << t;
    EXPECT_TRUE(r.second_inequality) << t;
  }
}

TEST(Selection, RejectsNonpositive) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 16);
  EXPECT_THROW(select_bubble(ScalarField(g, 0.0), {0.0, 0.0}, 0.5, 1.0), std::invalid_argument);
  EXPECT_THROW(select_bubble(ScalarField(g, 1.0), {0.0, 0.0}, -0.5, 1.0), std::invalid_argument);
}

TEST(SupInf, BubbleValue) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.2, 240);
  const ClosedFormField u = bubble_nonlocal({1.0, {0.0, 0.0}, 1.0});
  const RegionMask K = mask_from_predicate(g, [](Point p) { return norm(p) < 0.01; });
  const RegionMask omega = region_mask(g, disk({0.0, 0.0}, 1.0));
  const double expected = u({0.0, 0.0}) + 2.0 * u({1.0, 0.0});
  EXPECT_NEAR(sup_inf_functional(u, K, omega, 2.0), expected, 0.02);
}

TEST(SupInf, ZeroAndDecreasingFamily) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 128);
  const RegionMask K = region_mask(g, disk({0.0, 0.0}, 0.1));
  const RegionMask omega = region_mask(g, disk({0.0, 0.0}, 0.9));
  EXPECT_EQ(sup_inf_functional(constant(0.0), K, omega, 2.0), 0.0);
  double previous = kInfinity;
  for (double delta : {4.0, 16.0, 64.0}) {
    const double v = sup_inf_functional(bubble_nonlocal({1.0, {0.0, 0.0}, delta}), K, omega, 2.0);
    EXPECT_LT(v, previous);
    previous = v;
  }
}

TEST(DrivingEstimate, LocalBubbleClosedForm) {
  const Grid2D g = make_grid({0.0, 0.0}, 4.0, 512);
  const ClosedFormField u = bubble_local({0.0, 0.0}, 1.0);
  const ClosedFormField f = custom_field("expU0", [u](Point p) { return std::exp(u(p)); });
  const DrivingEstimate d = driving_estimate_check(u, f, {0.0, 0.0}, 4.0, 1.0, region_mask(g, disk({0.0, 0.0}, 4.0)));
  EXPECT_NEAR(d.lhs, 2.0 * std::log(17.0), 0.05);
  EXPECT_NEAR(d.rhs, 2.0 * std::log(4.0), 1e-3);
  EXPECT_GE(d.lhs, d.rhs);
}

TEST(DrivingEstimate, ZeroSource) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 64);
  const DrivingEstimate d =
      driving_estimate_check(constant(1.0), constant(0.0), {0.0, 0.0}, 0.8, 0.2, region_mask(g, disk({0.0, 0.0}, 0.8)));
  EXPECT_EQ(d.rhs, 0.0);
  EXPECT_EQ(d.lhs, 0.0);
}

TEST(DrivingEstimate, NonlocalBubbleAllRatios) {
  const double mu = 1.0;
  const Grid2D g = make_grid({0.0, 0.0}, 8.0, 512);
  const ClosedFormField u = bubble_nonlocal({mu, {0.0, 0.0}, 1.0});
  const NonlocalField field(u, 1.0, full_plane_source(u, g, mu), g, RieszConfig{mu});
  const RegionMask omega = region_mask(g, disk({0.0, 0.0}, 4.0));
  for (double ratio : {2.0, 4.0, 8.0, 16.0}) {
    const DrivingEstimate d = driving_estimate_check(u, field.rhs(), {0.0, 0.0}, 4.0, 4.0 / ratio, omega);
    EXPECT_GE(d.lhs, d.rhs - 1e-6) << ratio;
  }
}

TEST(BrezisMerle, ConstantSource) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 128);
  const RegionMask d = region_mask(g, disk({0.0, 0.0}, 1.0));
  const BrezisMerle bm = brezis_merle_check(ScalarField(g, 1.0), d, 2.0 * kPi);
  const double exact = 2.0 * kPi * (std::exp(0.5) - 1.0);
  EXPECT_NEAR(bm.lhs, exact, 0.01 * exact);
  EXPECT_NEAR(bm.bound, kEightPi, 1e-12);
  EXPECT_LE(bm.lhs, bm.bound);
}

TEST(BrezisMerle, BubbleSource) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 96);
  const RegionMask d = region_mask(g, disk({0.0, 0.0}, 1.0));
  const ScalarField f = sample(bubble_local({0.0, 0.0}, 3.0), g, [](double v) { return std::exp(v); });
  const BrezisMerle bm = brezis_merle_check(f, d, 2.0 * kPi);
  EXPECT_LE(bm.lhs, bm.bound);
}

TEST(BrezisMerle, Preconditions) {
  const Grid2D g = make_grid({0.0, 0.0}, 1.0, 32);
  const RegionMask d = region_mask(g, disk({0.0, 0.0}, 1.0));
  EXPECT_THROW(brezis_merle_check(ScalarField(g, 1.0), d, 13.0), std::invalid_argument);
  EXPECT_THROW(brezis_merle_check(ScalarField(g, -1.0), d, 1.0), std::invalid_argument);
  EXPECT_THROW(brezis_merle_check(ScalarField(g, 0.0), d, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace liouville
