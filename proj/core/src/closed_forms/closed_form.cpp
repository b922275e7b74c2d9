#include "liouville/closed_forms/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liouville/closed_forms/exponents.hpp"
#include "liouville/errors.hpp"

namespace liouville {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

double nonlocal_value(const BubbleParams& b, Point x) {
  const double r2 = norm2(x - b.x0);
  return -2.0 * std::log1p(b.delta * b.delta * r2) + bubble_shift(b.mu) + 2.0 * std::log(b.delta);
}

double local_value(Point x0, double delta, Point x) {
  const double r2 = norm2(x - x0);
  return std::log(8.0) - 2.0 * std::log1p(delta * delta * r2) + 2.0 * std::log(delta);
}

BubbleParams rigged_as_bubble(const kinds::RiggedU& r) { return {r.mu, {0.0, 0.0}, double(r.k)}; }

// Applies one transform to the argument and returns the additive term.
double step(const Transform& t, Point& y) {
  if (const auto* r = std::get_if<Rescale>(&t)) {
    y = r->delta * (y - r->x0);
    return 2.0 * std::log(r->delta);
  }
  const auto& k = std::get<Kelvin>(t);
  const Point d = y - k.x0;
  const double d2 = norm2(d);
  if (d2 == 0.0) throw NumericError("kelvin transform evaluated at its own center");
  const double s2 = k.sigma * k.sigma;
  y = k.x0 + (s2 / d2) * d;
  return 4.0 * std::log(k.sigma) - 2.0 * std::log(d2);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive");
}

ClosedFormField wrap(const ClosedFormField& u, const Transform& t) {
  std::vector<Transform> chain{t};
  const ClosedFormField* base = &u;
  if (const auto* c = std::get_if<std::shared_ptr<const kinds::Composite>>(&u.kind())) {
    chain.insert(chain.end(), (*c)->chain.begin(), (*c)->chain.end());
    base = &(*c)->base;
  }
  if (chain.size() > kMaxTransformDepth) {
    throw std::invalid_argument("transform chain deeper than " + std::to_string(kMaxTransformDepth));
  }
  auto node = std::make_shared<kinds::Composite>(kinds::Composite{*base, std::move(chain)});
  return ClosedFormField(std::shared_ptr<const kinds::Composite>(std::move(node)));
}

}  // namespace

double bubble_shift(double mu) {
  require_mu(mu);
  return 2.0 / (4.0 - mu) * std::log(4.0 * (2.0 - mu) / kPi);
}

double bubble_peak(double mu) { return std::exp(bubble_shift(mu)); }

double bubble_energy(double mu) {
  require_mu(mu);
  return std::pow(4.0 * (2.0 - mu), 2.0 / (4.0 - mu)) * std::pow(kPi, (2.0 - mu) / (4.0 - mu));
}

ClosedFormField::ClosedFormField(Kind kind) : kind_(std::move(kind)) {}

double ClosedFormField::operator()(Point x) const {
  return std::visit(
      Overload{
          [](const kinds::Constant& c) { return c.value; },
          [x](const kinds::LocalBubble& b) { return local_value(b.x0, b.delta, x); },
          [x](const kinds::NonlocalBubble& b) { return nonlocal_value(b.params, x); },
          [x](const kinds::RiggedU& r) { return nonlocal_value(rigged_as_bubble(r), x); },
          [x](const kinds::RiggedF& r) {
            const double k2 = double(r.k) * r.k;
            const double s = 1.0 + k2 * norm2(x);
            return 8.0 * k2 / (s * s);
          },
          [x](const kinds::RadialPower& p) { return p.coef * std::pow(distance(x, p.center), p.power); },
          [x](const kinds::Superposition& s) {
            std::vector<double> v;
            v.reserve(s.members.size());
            for (const auto& m : s.members) v.push_back(m(x));
            const double top = *std::max_element(v.begin(), v.end());
            if (!std::isfinite(top)) return top;
            double acc = 0.0;
            for (double e : v) acc += std::exp(e - top);
            return top + std::log(acc);
          },
          [x](const kinds::Custom& c) { return c.eval(x); },
          [x](const std::shared_ptr<const kinds::Composite>& c) {
            Point y = x;
            double acc = 0.0;
            for (const auto& t : c->chain) acc += step(t, y);
            return c->base(y) + acc;
          },
      },
      kind_);
}

std::string ClosedFormField::name() const {
  return std::visit(Overload{
                        [](const kinds::Constant&) { return std::string("constant"); },
                        [](const kinds::LocalBubble&) { return std::string("local_bubble"); },
                        [](const kinds::NonlocalBubble&) { return std::string("nonlocal_bubble"); },
                        [](const kinds::RiggedU&) { return std::string("rigged_u"); },
                        [](const kinds::RiggedF&) { return std::string("rigged_F"); },
                        [](const kinds::RadialPower&) { return std::string("radial_power"); },
                        [](const kinds::Superposition&) { return std::string("superposition"); },
                        [](const kinds::Custom& c) { return c.label; },
                        [](const std::shared_ptr<const kinds::Composite>& c) {
                          return "composite(" + c->base.name() + ")";
                        },
                    },
                    kind_);
}

std::optional<TailLaw> ClosedFormField::tail() const {
  using R = std::optional<TailLaw>;
  return std::visit(
      Overload{
          [](const kinds::LocalBubble& b) -> R {
            return TailLaw{TailLaw::Of::ExpField, b.x0, 8.0 / (b.delta * b.delta), 4.0};
          },
          [](const kinds::NonlocalBubble& b) -> R {
            const auto& p = b.params;
            return TailLaw{TailLaw::Of::ExpField, p.x0, bubble_peak(p.mu) / (p.delta * p.delta), 4.0};
          },
          [](const kinds::RiggedU& r) -> R {
            return TailLaw{TailLaw::Of::ExpField, {0.0, 0.0}, bubble_peak(r.mu) / (double(r.k) * r.k), 4.0};
          },
          [](const kinds::RiggedF& r) -> R {
            return TailLaw{TailLaw::Of::Field, {0.0, 0.0}, 8.0 / (double(r.k) * r.k), 4.0};
          },
          [](const kinds::RadialPower& p) -> R {
            if (p.power >= 0.0) return std::nullopt;
            return TailLaw{TailLaw::Of::Field, p.center, p.coef, -p.power};
          },
          [](const auto&) -> R { return std::nullopt; },
      },
      kind_);
}

std::optional<BubbleParams> ClosedFormField::as_nonlocal_bubble() const {
  if (const auto* b = std::get_if<kinds::NonlocalBubble>(&kind_)) return b->params;
  if (const auto* r = std::get_if<kinds::RiggedU>(&kind_)) return rigged_as_bubble(*r);
  return std::nullopt;
}

std::optional<std::pair<Point, double>> ClosedFormField::as_local_bubble() const {
  if (const auto* b = std::get_if<kinds::LocalBubble>(&kind_)) return std::pair{b->x0, b->delta};
  return std::nullopt;
}

std::size_t ClosedFormField::depth() const {
  if (const auto* c = std::get_if<std::shared_ptr<const kinds::Composite>>(&kind_)) return (*c)->chain.size();
  return 0;
}

ClosedFormField constant(double c) { return ClosedFormField(kinds::Constant{c}); }

ClosedFormField bubble_local(Point x0, double delta) {
  require_positive(delta, "bubble_local: delta");
  return ClosedFormField(kinds::LocalBubble{x0, delta});
}

ClosedFormField bubble_nonlocal(const BubbleParams& params) {
  require_mu(params.mu);
  require_positive(params.delta, "bubble_nonlocal: delta");
  return ClosedFormField(kinds::NonlocalBubble{params});
}

ClosedFormField radial_power(Point center, double coef, double power) {
  return ClosedFormField(kinds::RadialPower{center, coef, power});
}

ClosedFormField superposition(std::vector<ClosedFormField> members) {
  if (members.empty()) throw std::invalid_argument("superposition: no members");
  return ClosedFormField(kinds::Superposition{std::move(members)});
}

ClosedFormField custom_field(std::string label, std::function<double(Point)> eval) {
  return ClosedFormField(kinds::Custom{std::move(label), std::move(eval)});
}

ClosedFormField rescale(const ClosedFormField& u, Point x0, double delta) {
  require_positive(delta, "rescale: delta");
  if (delta == 1.0 && x0 == Point{0.0, 0.0}) return u;
  const auto& k = u.kind();
  if (const auto* c = std::get_if<kinds::Constant>(&k)) return constant(c->value + 2.0 * std::log(delta));
  if (const auto* b = std::get_if<kinds::LocalBubble>(&k)) {
    return bubble_local(x0 + (1.0 / delta) * b->x0, b->delta * delta);
  }
  if (auto b = u.as_nonlocal_bubble()) {
    return bubble_nonlocal({b->mu, x0 + (1.0 / delta) * b->x0, b->delta * delta});
  }
  if (const auto* c = std::get_if<std::shared_ptr<const kinds::Composite>>(&k)) {
    // Two consecutive rescalings compose into one.
    if (const auto* inner = std::get_if<Rescale>(&(*c)->chain.front())) {
      const Rescale merged{x0 + (1.0 / delta) * inner->x0, inner->delta * delta};
      std::vector<Transform> rest((*c)->chain.begin() + 1, (*c)->chain.end());
      ClosedFormField out = (*c)->base;
      for (auto it = rest.rbegin(); it != rest.rend(); ++it) out = wrap(out, *it);
      return wrap(out, merged);
    }
  }
  return wrap(u, Rescale{x0, delta});
}

ClosedFormField kelvin(const ClosedFormField& u, Point x0, double sigma) {
  require_positive(sigma, "kelvin: sigma");
  const auto& k = u.kind();
  // A bubble inverted about its own center is the bubble with reciprocal scale.
  if (const auto* b = std::get_if<kinds::LocalBubble>(&k); b && b->x0 == x0) {
    return bubble_local(x0, 1.0 / (b->delta * sigma * sigma));
  }
  if (auto b = u.as_nonlocal_bubble(); b && b->x0 == x0) {
    return bubble_nonlocal({b->mu, x0, 1.0 / (b->delta * sigma * sigma)});
  }
  return wrap(u, Kelvin{x0, sigma});
}

RiggedMember rigged_family(int k, double mu) {
  require_mu(mu);
  if (k < 1) throw std::invalid_argument("rigged_family: k must be at least 1");
  RiggedMember m{ClosedFormField(kinds::RiggedU{k, mu}), ClosedFormField(kinds::RiggedF{k, mu}),
                 std::pow(4.0 * (2.0 - mu) / kPi, 1.0 / (4.0 - mu))};
  return m;
}

ScalarField sample(const ClosedFormField& f, const Grid2D& grid) {
  ScalarField out = ScalarField::from_function(grid, [&](Point p) { return f(p); });
  out.require_finite("sample");
  return out;
}

ScalarField sample(const ClosedFormField& f, const Grid2D& grid, const std::function<double(double)>& g) {
  ScalarField out = ScalarField::from_function(grid, [&](Point p) { return g(f(p)); });
  out.require_finite("sample");
  return out;
}

std::optional<RadialTail> exp_tail(const ClosedFormField& f, double scale) {
  if (auto b = f.as_nonlocal_bubble()) {
    const double amp = std::pow(bubble_peak(b->mu) * b->delta * b->delta, scale);
    return bubble_tail(b->x0, amp, b->delta, scale);
  }
  if (auto b = f.as_local_bubble()) {
    const double amp = std::pow(8.0 * b->second * b->second, scale);
    return bubble_tail(b->first, amp, b->second, scale);
  }
  return std::nullopt;
}

}  // namespace liouville
