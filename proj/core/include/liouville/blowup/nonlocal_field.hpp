#pragma once

#include <optional>
#include <variant>

#include "liouville/closed_forms/closed_form.hpp"
#include "liouville/field/region_mask.hpp"
#include "liouville/field/scalar_field.hpp"
#include "liouville/potential/riesz.hpp"

namespace liouville {

/// Coefficient V: a constant or a sampled field.
using Coefficient = std::variant<double, ScalarField>;

/// Region carrying the source of the Riesz term: a mask, plus a radial tail
/// when the source is the whole plane.
struct Source {
  RegionMask mask;
  std::optional<SourceTail> tail;
};

Source source_region(const RegionMask& mask);

/// The whole plane for a bubble-type field: the largest disk about the
/// bubble center that fits in the grid, plus the exact radial tail of e^{lambda u}.
Source full_plane_source(const ClosedFormField& u, const Grid2D& grid, double mu);

/// The right side V * I_mu[e^{lambda u} chi_src] e^{lambda u} sampled on a grid.
class NonlocalField {
 public:
  NonlocalField(const ClosedFormField& u, const Coefficient& V, Source src, const Grid2D& grid,
                const RieszConfig& cfg);

  const Grid2D& grid() const { return grid_; }
  double lambda() const { return lambda_; }
  const Source& source() const { return src_; }

  /// e^{lambda u} at the nodes.
  const ScalarField& density() const { return density_; }
  /// I_mu[e^{lambda u} chi_src] at the nodes, tail included.
  const ScalarField& potential() const { return potential_; }
  /// V * potential * density.
  const ScalarField& rhs() const { return rhs_; }

  /// Integral of the right side over the target.
  double mass(const RegionMask& target) const;

  /// Integral of the right side over the whole plane. Needs a full-plane
  /// source and constant V; the part of the plane outside the source disk is
  /// added by radial quadrature.
  double mass_full_plane() const;

 private:
  Grid2D grid_;
  double mu_;
  double lambda_;
  Source src_;
  std::optional<double> v_constant_;
  ScalarField density_;
  ScalarField potential_;
  ScalarField rhs_;
};

}  // namespace liouville
