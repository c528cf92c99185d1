#pragma once

#include <cstdint>
#include <vector>

#include "nonwander/maps.hpp"

namespace nonwander {

struct LapEntropyResult {
  double entropy = 0.0;                 // slope of log(laps) vs n on the upper half
  std::vector<std::int64_t> lap_counts; // lap_counts[k] = laps of the (k+1)-fold composition
  bool refinement_warning = false;      // grid halving moved some count by > 1%
};

// Monotone laps of the n-fold composition, counted by sign changes of the
// chain-rule derivative along a regular grid of the map's interval.
std::int64_t lap_count(const MapSystem& map1d, int n, std::int64_t grid_points);

// Topological entropy estimate for piecewise-monotone interval maps:
// growth rate of the lap counts of iterates, least-squares fitted on the
// last half of 1..iterations; grid has 2^sample_density points.
LapEntropyResult lap_entropy(const MapSystem& map1d, int iterations, int sample_density);

}  // namespace nonwander
