#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liouville/blowup/nonlocal_field.hpp"
#include "liouville/closed_forms/closed_form.hpp"
#include "liouville/closed_forms/exponents.hpp"
#include "liouville/field/region_mask.hpp"
#include "liouville/field/scalar_field.hpp"

namespace liouville {

struct MassReport {
  std::string label;
  double region_mass = 0.0;
  double residual_sup = 0.0;
  std::string notes;
};

/// -Delta_h u - V I_mu[e^{lambda u} chi_src] e^{lambda u} at interior nodes.
ScalarField nonlocal_residual(const ClosedFormField& u, const Coefficient& V, const Source& src,
                              const Grid2D& eval_grid, double mu);

/// -Delta_h u - e^u at interior nodes.
ScalarField local_residual(const ClosedFormField& u, const Grid2D& grid);

/// Integral over the target of V I_mu[e^{lambda u} chi_src] e^{lambda u}.
double region_mass(const ClosedFormField& u, const Coefficient& V, const Source& src, const RegionMask& target,
                   double mu);

/// Same integral for disjoint source and target. Small regions are summed
/// pairwise with the kernel table, large ones go through the FFT.
/// Throws std::invalid_argument on overlap.
double interaction_mass(const ClosedFormField& u, const Coefficient& V, const RegionMask& src,
                        const RegionMask& target, double mu);

/// 4 pi (1 - 1/(2 lambda p)); 4 pi for p = infinity.
double mass_threshold(double p, double mu);

enum class Alternative { A1, A2, A3, Inconclusive };

std::string to_string(Alternative a);

struct AlternativeVerdict {
  Alternative verdict = Alternative::Inconclusive;
  bool inconclusive = false;
  std::vector<Point> blowup_points;
  std::vector<double> masses;
  /// Largest value over the compact set, per family member.
  std::vector<double> sups;
  std::string reason;
};

struct ClassifierParams {
  double bound = 10.0;            // M
  double drop_threshold = 20.0;   // T
  double mass_tolerance = 0.05;   // relative, against the threshold
  double mu = 1.0;
  double V = 1.0;
  double growth = 2.0;            // ball radius = 8 e^{-u/2} * growth
  double p = kInfinity;
};

/// Sorts a sequence into the three alternatives. `omega` is the compact set
/// where sups are taken; it also serves as the source region for masses.
AlternativeVerdict classify_alternative(const std::vector<ClosedFormField>& family, const RegionMask& omega,
                                        const ClassifierParams& params);

struct SelectionResult {
  Point x;
  double r = 0.0;
  Point x_tilde;  // snapped center
  double phi_x = 0.0;
  double phi_x_tilde = 0.0;
  double ball_max = 0.0;  // max of phi over the nodes of B_r(x)
  bool first_inequality = false;
  bool second_inequality = false;
};

/// Discrete maximizer of (rho - |y - x~|)^a phi(y) over nodes of B_rho(x~),
/// with x~ snapped to its nearest node, and the two selection inequalities.
SelectionResult select_bubble(const ScalarField& phi, Point x_tilde, double rho, double a);

/// max_K u + C1 min_omega u over the flagged nodes.
double sup_inf_functional(const ClosedFormField& u, const RegionMask& K, const RegionMask& omega, double C1);

struct DrivingEstimate {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = u(x0) - min_omega u, rhs = (1/2 pi) * int_{B_r(x0)} f * log(rho/r).
DrivingEstimate driving_estimate_check(const ClosedFormField& u, const ScalarField& f, Point x0, double rho,
                                       double r, const RegionMask& omega);
DrivingEstimate driving_estimate_check(const ClosedFormField& u, const ClosedFormField& f, Point x0, double rho,
                                       double r, const RegionMask& omega);

struct BrezisMerle {
  double lhs = 0.0;
  double bound = 0.0;
};

/// Solves the Dirichlet problem on the disk and integrates
/// exp((4 pi - delta)|u| / ||f||_1) over it.
BrezisMerle brezis_merle_check(const ScalarField& f, const RegionMask& disk, double delta);

}  // namespace liouville
