#include "liouville/blowup/nonlocal_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liouville/closed_forms/exponents.hpp"
#include "liouville/errors.hpp"
#include "liouville/field/quadrature.hpp"

namespace liouville {

Source source_region(const RegionMask& mask) { return Source{mask, std::nullopt}; }

Source full_plane_source(const ClosedFormField& u, const Grid2D& grid, double mu) {
  const auto tail = exp_tail(u, lambda_of(mu));
  if (!tail) throw std::invalid_argument("full_plane_source: field has no radial tail");
  const Point c = tail->center;
  const double r0 = std::min({c.x - grid.xmin(), grid.xmax() - c.x, c.y - grid.ymin(), grid.ymax() - c.y});
  if (!(r0 > 0.0)) throw std::invalid_argument("full_plane_source: tail center outside the grid");
  return Source{region_mask(grid, disk(c, r0)), SourceTail{c, r0, tail->profile}};
}

NonlocalField::NonlocalField(const ClosedFormField& u, const Coefficient& V, Source src, const Grid2D& grid,
                             const RieszConfig& cfg)
    : grid_(grid),
      mu_(cfg.mu),
      lambda_(lambda_of(cfg.mu)),
      src_(std::move(src)),
      density_(grid),
      potential_(grid),
      rhs_(grid) {
  require_same_grid(src_.mask.grid(), grid, "NonlocalField source");
  if (const auto* c = std::get_if<double>(&V)) {
    v_constant_ = *c;
  } else {
    require_same_grid(std::get<ScalarField>(V).grid(), grid, "NonlocalField coefficient");
  }
  const double lam = lambda_;
  density_ = ScalarField::from_function(grid, [&](Point p) { return std::exp(lam * u(p)); });
  density_.require_finite("e^{lambda u}");
  potential_ = RieszOperator(grid, cfg).apply(density_, src_.mask);
  if (src_.tail) potential_ += riesz_tail_field(*src_.tail, mu_, grid);
  rhs_ = potential_ * density_;
  if (v_constant_) {
    rhs_ *= *v_constant_;
  } else {
    rhs_ *= std::get<ScalarField>(V);
  }
  rhs_.require_finite("nonlocal right side");
}

double NonlocalField::mass(const RegionMask& target) const { return integrate(rhs_, target); }

double NonlocalField::mass_full_plane() const {
  if (!src_.tail || !v_constant_) {
    throw std::logic_error("mass_full_plane: needs a full-plane source and constant V");
  }
  const SourceTail& t = *src_.tail;
  const RegionMask inner = region_mask(grid_, disk(t.center, t.r0));
  const double mu = mu_;
  const double outer = radial_mass([&](double r) { return t.rho(r) * riesz_radial(t.rho, mu, r, 0.0); }, t.r0);
  return integrate(rhs_, inner) + *v_constant_ * outer;
}

}  // namespace liouville
