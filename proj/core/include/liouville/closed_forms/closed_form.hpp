#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liouville/field/point.hpp"
#include "liouville/field/quadrature.hpp"
#include "liouville/field/scalar_field.hpp"

namespace liouville {

struct BubbleParams {
  double mu = 1.0;
  Point x0;
  double delta = 1.0;
};

/// Far-field power law c * r^(-exponent) about `center`.
struct TailLaw {
  enum class Of { Field, ExpField };
  Of of = Of::ExpField;
  Point center;
  double coef = 0.0;
  double exponent = 4.0;
};

struct Rescale {
  Point x0;
  double delta = 1.0;
};

struct Kelvin {
  Point x0;
  double sigma = 1.0;
};

using Transform = std::variant<Rescale, Kelvin>;

inline constexpr std::size_t kMaxTransformDepth = 8;

class ClosedFormField;

namespace kinds {
struct Constant {
  double value = 0.0;
};
/// log 8 / (1 + |y|^2)^2 at y = delta (x - x0), plus 2 log delta.
struct LocalBubble {
  Point x0;
  double delta = 1.0;
};
struct NonlocalBubble {
  BubbleParams params;
};
struct RiggedU {
  int k = 1;
  double mu = 1.0;
};
/// 8 k^2 / (1 + k^2 |x|^2)^2.
struct RiggedF {
  int k = 1;
  double mu = 1.0;
};
/// coef * |x - center|^power.
struct RadialPower {
  Point center;
  double coef = 1.0;
  double power = 0.0;
};
/// log of the sum of the members' exponentials.
struct Superposition {
  std::vector<ClosedFormField> members;
};
struct Custom {
  std::string label;
  std::function<double(Point)> eval;
};
struct Composite;
}  // namespace kinds

/// Symbolic, exactly evaluable scalar function of the plane.
class ClosedFormField {
 public:
  using Kind = std::variant<kinds::Constant, kinds::LocalBubble, kinds::NonlocalBubble, kinds::RiggedU,
                            kinds::RiggedF, kinds::RadialPower, kinds::Superposition, kinds::Custom,
                            std::shared_ptr<const kinds::Composite>>;

  explicit ClosedFormField(Kind kind);

  double operator()(Point x) const;
  double operator()(double x, double y) const { return (*this)({x, y}); }

  const Kind& kind() const { return kind_; }
  std::string name() const;

  /// Far-field law of the field or of its exponential, if the kind has one.
  std::optional<TailLaw> tail() const;

  /// The underlying nonlocal bubble, for nonlocal bubbles and rigged u_k.
  std::optional<BubbleParams> as_nonlocal_bubble() const;
  /// Center and scale of a local bubble.
  std::optional<std::pair<Point, double>> as_local_bubble() const;

  /// Number of transforms wrapped around the base kind.
  std::size_t depth() const;

 private:
  Kind kind_;
};

namespace kinds {
struct Composite {
  ClosedFormField base;
  std::vector<Transform> chain;  // outermost first
};
}  // namespace kinds

ClosedFormField constant(double c);
ClosedFormField bubble_local(Point x0, double delta);
ClosedFormField bubble_nonlocal(const BubbleParams& params);
ClosedFormField radial_power(Point center, double coef, double power);
ClosedFormField superposition(std::vector<ClosedFormField> members);
ClosedFormField custom_field(std::string label, std::function<double(Point)> eval);

/// x -> u(delta (x - x0)) + 2 log delta.
ClosedFormField rescale(const ClosedFormField& u, Point x0, double delta);
/// x -> u(x0 + sigma^2 (x - x0)/|x - x0|^2) + 4 log(sigma/|x - x0|).
ClosedFormField kelvin(const ClosedFormField& u, Point x0, double sigma);

/// (4(2 - mu)/pi)^(2/(4 - mu)): the value of e^U at the bubble center for delta = 1.
double bubble_peak(double mu);
/// Additive constant of the nonlocal bubble, (2/(4 - mu)) log(4(2 - mu)/pi).
double bubble_shift(double mu);
/// Closed-form energy of e^U over the plane.
double bubble_energy(double mu);

struct RiggedMember {
  ClosedFormField u;
  ClosedFormField F;
  double A = 1.0;
};

/// u_k = 2 log(A k / (1 + k^2 |x|^2)) with A = (4(2 - mu)/pi)^(1/(4 - mu)),
/// and its Laplacian F_k = 8 k^2 / (1 + k^2 |x|^2)^2.
RiggedMember rigged_family(int k, double mu);

/// Values at the grid nodes. Throws NumericError on a non-finite value.
ScalarField sample(const ClosedFormField& f, const Grid2D& grid);
/// Values of g(f(x)) at the grid nodes.
ScalarField sample(const ClosedFormField& f, const Grid2D& grid, const std::function<double(double)>& g);

/// Exact radial tail of e^{scale * u} for bubble kinds, centered at the bubble.
std::optional<RadialTail> exp_tail(const ClosedFormField& f, double scale = 1.0);

}  // namespace liouville
