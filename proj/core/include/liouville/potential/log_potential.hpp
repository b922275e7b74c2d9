#pragma once

#include <optional>

#include "liouville/field/region_mask.hpp"
#include "liouville/field/scalar_field.hpp"
#include "liouville/potential/riesz.hpp"

namespace liouville {

/// (Gamma * f)(x) = -(1/2 pi) sum f(y) log|x - y| h^2 over the support, with
/// the cell average of log at near cells. A radial tail beyond the support
/// disk is added by 1-D quadrature.
ScalarField log_potential(const ScalarField& f, const RegionMask& support,
                          const std::optional<SourceTail>& tail = std::nullopt);

/// Solution of -Delta u = f in the disk with u = 0 on its boundary, by direct
/// summation against the disk's Green's function. Zero outside the disk.
/// Throws std::invalid_argument unless the mask carries an exact disk.
ScalarField dirichlet_disk_solve(const ScalarField& f, const RegionMask& disk);

struct HlsRatio {
  double value = 0.0;
  /// Set when f vanishes and the ratio is 0 by convention.
  bool degenerate = false;
  double r = 0.0;
};

/// ||I_mu f||_{L^r(grid)} / ||f||_{L^p(support)} with 1/r = 1/p - (2 - mu)/2.
HlsRatio hls_ratio(const ScalarField& f, const RegionMask& support, double mu, double p);

}  // namespace liouville
