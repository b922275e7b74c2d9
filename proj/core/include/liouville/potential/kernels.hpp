#pragma once

#include <vector>

namespace liouville {

enum class SingularRule { CellAverage, PolarLocal };

/// Offsets (in cells) up to this Chebyshev radius use exact cell averages.
inline constexpr int kNearRadius = 8;

/// Integral of (x^2 + y^2)^(-mu/2) over [0, a] x [0, b], a, b >= 0.
double riesz_corner(double mu, double a, double b);
/// Integral of ln(x^2 + y^2) over [0, a] x [0, b], a, b >= 0.
double log_corner(double a, double b);

/// Average of |z|^(-mu) over the unit cell centered at (dx, dy).
double riesz_unit_average(double mu, double dx, double dy);
/// Average of log|z| over the unit cell centered at (dx, dy).
double log_unit_average(double dx, double dy);

/// Kernel weight between a target and a cell whose center is offset by
/// (dx, dy) cells, for cell size h. Near cells use the exact cell average,
/// far cells a corrected point value.
double riesz_weight(double mu, double h, double dx, double dy, SingularRule rule = SingularRule::CellAverage);
double log_weight(double h, double dx, double dy);

/// Kernel weights for integer cell offsets, stored once per octant so that
/// weight(di, dj) is exactly invariant under the eight lattice symmetries.
class KernelTable {
 public:
  enum class Kind { Riesz, Log };

  static KernelTable riesz(double mu, double h, SingularRule rule = SingularRule::CellAverage);
  static KernelTable logarithmic(double h);

  Kind kind() const { return kind_; }
  double mu() const { return mu_; }
  double h() const { return h_; }
  SingularRule rule() const { return rule_; }

  double weight(int di, int dj) const;
  double center() const { return near_[0]; }

  /// Multiplies the center weight; used only by fault-injection self tests.
  void perturb_center(double factor) { near_[0] *= factor; }

  /// Dense (2n-1) x (2n-1) weights for offsets in (-n, n), row-major in dj.
  std::vector<double> dense(int n) const;

 private:
  KernelTable(Kind kind, double mu, double h, SingularRule rule);
  double far_weight(int a, int b) const;

  Kind kind_;
  double mu_;
  double h_;
  SingularRule rule_;
  std::vector<double> near_;  // indexed by a * (a + 1) / 2 + b, a >= b >= 0
};

}  // namespace liouville
