#pragma once

#include <limits>

namespace liouville {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Exponent bookkeeping for a given kernel order mu and integrability p.
struct ExponentRelations {
  double mu = 1.0;
  double lambda = 0.75;  // (4 - mu) / 4
  double p = kInfinity;
  double q = 4.0 / 3.0;  // 1/q + 1/(2p) = lambda
  double p_conjugate = 1.0;
};

/// Rejects mu outside (0, 2) and p <= 2/mu.
ExponentRelations exponents(double mu, double p);

/// (4 - mu) / 4, after validating mu.
double lambda_of(double mu);

void require_mu(double mu);

}  // namespace liouville
