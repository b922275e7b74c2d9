#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "liouville/potential/kernels.hpp"

namespace liouville {
namespace {

// Average of |y|^-mu over the unit cell centered at (dx, dy), by nested adaptive quadrature.
double brute_average(double mu, double dx, double dy) {
  using boost::math::quadrature::gauss_kronrod;
  auto row = [&](double y) {
    auto f = [&](double x) { return std::pow(x * x + y * y, -0.5 * mu); };
    if (dx - 0.5 < 0.0 && dx + 0.5 > 0.0) {
      return gauss_kronrod<double, 61>::integrate(f, dx - 0.5, 0.0, 15, 1e-13) +
             gauss_kronrod<double, 61>::integrate(f, 0.0, dx + 0.5, 15, 1e-13);
    }
    return gauss_kronrod<double, 61>::integrate(f, dx - 0.5, dx + 0.5, 15, 1e-13);
  };
  if (dy - 0.5 < 0.0 && dy + 0.5 > 0.0) {
    return gauss_kronrod<double, 61>::integrate(row, dy - 0.5, 0.0, 15, 1e-12) +
           gauss_kronrod<double, 61>::integrate(row, 0.0, dy + 0.5, 15, 1e-12);
  }
  return gauss_kronrod<double, 61>::integrate(row, dy - 0.5, dy + 0.5, 15, 1e-12);
}

TEST(Kernels, CenterAverageForUnitOrder) {
  EXPECT_NEAR(riesz_unit_average(1.0, 0.0, 0.0), 4.0 * std::asinh(1.0), 1e-13);
}

TEST(Kernels, CenterAverageOfLogarithm) {
  EXPECT_NEAR(log_unit_average(0.0, 0.0), -0.5 * std::log(2.0) - 1.5 + std::numbers::pi / 4.0, 1e-13);
}

TEST(Kernels, CellAveragesMatchBruteForce) {
  for (double mu : {0.3, 1.0, 1.7}) {
    for (auto [dx, dy] : {std::pair{1.0, 0.0}, {2.0, 1.0}, {3.0, 3.0}, {5.0, 2.0}}) {
      const double exact = brute_average(mu, dx, dy);
      EXPECT_NEAR(riesz_unit_average(mu, dx, dy), exact, 1e-9 * exact) << "mu=" << mu << " at " << dx << "," << dy;
    }
  }
}

TEST(Kernels, FarApproximationContinuesNearTable) {
  for (double mu : {0.5, 1.0, 1.5}) {
    for (auto [a, b] : {std::pair{9, 0}, {9, 4}, {12, 12}}) {
      const double r2 = a * a + b * b;
      const double far = std::pow(r2, -0.5 * mu) * (1.0 + mu * mu / (24.0 * r2));
      EXPECT_NEAR(far, riesz_unit_average(mu, a, b), 2e-6 * far);
    }
  }
}

TEST(Kernels, WeightsScaleWithSpacing) {
  const double mu = 0.8;
  EXPECT_NEAR(riesz_weight(mu, 0.1, 2.0, 1.0), std::pow(0.1, -mu) * riesz_unit_average(mu, 2.0, 1.0), 1e-12);
  EXPECT_NEAR(log_weight(0.1, 0.0, 0.0), std::log(0.1) + log_unit_average(0.0, 0.0), 1e-14);
}

TEST(Kernels, TableIsSymmetricUnderGridSymmetries) {
  for (double mu : {0.5, 1.0, 1.5}) {
    const KernelTable t = KernelTable::riesz(mu, 0.05);
    for (int a = -20; a <= 20; ++a) {
      for (int b = -20; b <= 20; ++b) {
        const double w = t.weight(a, b);
        EXPECT_EQ(w, t.weight(b, a));
        EXPECT_EQ(w, t.weight(-a, b));
        EXPECT_EQ(w, t.weight(a, -b));
      }
    }
  }
}

TEST(Kernels, CenterFinitePositive) {
  for (double mu : {0.1, 1.0, 1.9}) {
    const KernelTable t = KernelTable::riesz(mu, 0.01);
    EXPECT_TRUE(std::isfinite(t.center()));
    EXPECT_GT(t.center(), 0.0);
  }
  const KernelTable polar = KernelTable::riesz(1.0, 1.0, SingularRule::PolarLocal);
  EXPECT_NEAR(polar.center(), 2.0 * std::sqrt(std::numbers::pi), 1e-13);
}

TEST(Kernels, DenseMatchesWeights) {
  const KernelTable t = KernelTable::riesz(1.2, 0.1);
  const int n = 12;
  const std::vector<double> d = t.dense(n);
  const int m = 2 * n - 1;
  for (int y = -(n - 1); y < n; ++y)
    for (int x = -(n - 1); x < n; ++x)
      EXPECT_EQ(d[static_cast<std::size_t>((y + n - 1) * m + (x + n - 1))], t.weight(x, y));
}

TEST(Kernels, RejectsBadOrder) {
  EXPECT_THROW(KernelTable::riesz(2.0, 0.1), std::invalid_argument);
  EXPECT_THROW(KernelTable::riesz(1.0, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace liouville
