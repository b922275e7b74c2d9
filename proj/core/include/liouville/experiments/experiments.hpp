#pragma once

#include <vector>

#include "liouville/experiments/report.hpp"
#include "liouville/field/point.hpp"

namespace liouville {

struct GridSpec {
  double half_width = 1.0;
  int n = 1024;
};

/// Single bubbles of increasing concentration; masses over B_R with the
/// source restricted to B_R and with the whole plane as source, extrapolated
/// to delta = infinity with a second-order Richardson step in 1/delta.
ExperimentReport run_quantization(double mu, const std::vector<double>& deltas, double R, const GridSpec& grid);

struct MultibubbleOptions {
  /// Core ball radius around each center; 0 picks a quarter of the smallest separation.
  double ball_radius = 0.0;
};

/// Superposition u = log(sum e^{u_i}) of bubbles; per-bubble, interaction,
/// neck and total masses over B_R.
ExperimentReport run_multibubble(double mu, const std::vector<Point>& centers, const std::vector<double>& deltas,
                                 double R, const GridSpec& grid, const MultibubbleOptions& options = {});

/// Interaction mass between balls of fixed radius around two bubbles at
/// separation d, for each d, and the fitted decay exponent.
ExperimentReport run_interaction_decay(double mu, double delta, const std::vector<double>& separations,
                                       double ball_radius, double cells_per_core = 4.0);

/// The counter-example family u_k = 2 log(A k/(1 + k^2|x|^2)).
ExperimentReport run_rigged(double mu, const std::vector<int>& ks, const GridSpec& grid);

}  // namespace liouville
