#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonwander/orbits.hpp"

namespace nonwander {

struct CascadeEntry {
  int n = 1;              // doubling level
  int period = 2;         // 2^n
  double flip_param = 0;  // parameter after which the attracting 2^n-cycle is born
};

struct CascadeTable {
  MapFamily family = MapFamily::Quadratic;
  std::optional<double> fixed_b;       // henon only
  double saddle_node = 0.0;            // birth parameter of the first fixed-point pair
  std::vector<CascadeEntry> entries;   // strictly increasing flip parameters
  std::vector<double> gap_ratios;      // (f_k - f_{k-1}) / (f_{k+1} - f_k) per triple
  std::optional<double> accumulation;  // geometric extrapolation of the cascade limit
  bool truncated = false;
  std::string truncation_reason;

  double flip(int n) const;  // flip parameter of level n (1-based); throws if absent
};

// Multipliers of the p-cycle near seed at the given parameters; refinement
// failures propagate as NumericalError.
MultiplierSet cycle_multiplier(MapFamily family, const ParamSet& params, int period,
                               const Point& seed, double tol = 1e-10);

// Parameter where the dominant multiplier of the p-cycle crosses -1,
// located by bisection with Newton cycle tracking across the bracket.
double locate_flip(MapFamily family, const ParamSet& fixed, int period,
                   std::pair<double, double> bracket, double tol = 1e-10);

// Parameter where the first fixed-point pair is born (multiplier through +1).
// Below the fold no fixed point with dominant multiplier < 1 exists; that
// side change is what the bisection tracks.
double locate_saddle_node(MapFamily family, const ParamSet& fixed,
                          std::pair<double, double> bracket, double tol = 1e-10);

// Chains flip locations for p = 1, 2, 4, ..., 2^{n_max - 1}, each bracket
// seeded past the previous flip by natural continuation; n_max <= 8.
CascadeTable build_cascade(MapFamily family, const ParamSet& fixed, int n_max);

}  // namespace nonwander
