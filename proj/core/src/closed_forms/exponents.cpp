#include "liouville/closed_forms/exponents.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace liouville {

void require_mu(double mu) {
  if (!(mu > 0.0 && mu < 2.0)) {
    throw std::invalid_argument("mu must lie in (0, 2), got " + std::to_string(mu));
  }
}

double lambda_of(double mu) {
  require_mu(mu);
  return (4.0 - mu) / 4.0;
}

ExponentRelations exponents(double mu, double p) {
  ExponentRelations e;
  e.mu = mu;
  e.lambda = lambda_of(mu);
  if (std::isnan(p) || !(p > 2.0 / mu)) {
    throw std::invalid_argument("exponents: p must exceed 2/mu");
  }
  e.p = p;
  if (std::isinf(p)) {
    e.q = 1.0 / e.lambda;
    e.p_conjugate = 1.0;
  } else {
    e.q = 1.0 / (e.lambda - 1.0 / (2.0 * p));
    e.p_conjugate = p / (p - 1.0);
  }
  return e;
}

}  // namespace liouville
