#pragma once

#include <optional>
#include <vector>

#include "liouville/field/region_mask.hpp"
#include "liouville/field/scalar_field.hpp"
#include "liouville/potential/convolution.hpp"
#include "liouville/potential/kernels.hpp"
#include "liouville/potential/radial.hpp"

namespace liouville {

struct RieszConfig {
  double mu = 1.0;
  SingularRule singular_rule = SingularRule::CellAverage;
  int padding_factor = 2;
  /// Multiplier on the center weight of the fast path only. 1 in normal use.
  double fault_center_factor = 1.0;
};

void validate(const RieszConfig& cfg);

/// Radial density continued beyond the disk of radius r0 about `center`.
/// Used together with a support mask equal to that disk.
struct SourceTail {
  Point center;
  double r0 = 1.0;
  RadialProfile rho;
};

/// Precomputed FFT evaluator of I_mu on one grid.
class RieszOperator {
 public:
  RieszOperator(const Grid2D& grid, const RieszConfig& cfg);

  const RieszConfig& config() const { return cfg_; }
  const KernelTable& table() const { return table_; }

  /// I_mu[density] at every node; the density is taken as zero off the grid.
  ScalarField apply(const ScalarField& density) const;
  /// I_mu[density * chi_support], with the support's fractional cell weights.
  ScalarField apply(const ScalarField& density, const RegionMask& support) const;

 private:
  RieszConfig cfg_;
  KernelTable table_;
  ConvolutionOperator conv_;
};

ScalarField riesz_fft(const ScalarField& density, const RieszConfig& cfg);
ScalarField riesz_fft(const ScalarField& density, const RegionMask& support, const RieszConfig& cfg);

struct DirectDiagnostics {
  bool negative_density = false;
};

/// Brute-force sum over support cells, one target at a time. Node targets use
/// the same table weights as the fast path; other targets get exact per-pair
/// cell averages. The tail, if given, is added by radial quadrature.
std::vector<double> riesz_direct(const ScalarField& density, const RegionMask& support, const RieszConfig& cfg,
                                 const std::vector<Point>& targets,
                                 const std::optional<SourceTail>& tail = std::nullopt,
                                 DirectDiagnostics* diagnostics = nullptr);

/// Potential of the tail alone at one point.
double riesz_tail_at(const SourceTail& tail, double mu, Point x);
/// Potential of the tail alone at every node, via a radial interpolant.
ScalarField riesz_tail_field(const SourceTail& tail, double mu, const Grid2D& grid);

}  // namespace liouville
