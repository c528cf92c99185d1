#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nonwander/maps.hpp"

namespace nonwander {

enum class StabilityClass { Attracting, Repelling, Saddle, Nonhyperbolic };

std::string stability_name(StabilityClass s);

struct MultiplierSet {
  std::array<std::complex<double>, 2> mu{};
  int count = 0;

  // Largest-modulus eigenvalue; ties resolved toward the later entry.
  std::complex<double> dominant() const {
    if (count == 1) return mu[0];
    return std::abs(mu[0]) > std::abs(mu[1]) ? mu[0] : mu[1];
  }
};

struct PeriodicOrbit {
  std::vector<Point> points;  // ordered cycle: points[(i+1) mod p] = psi(points[i])
  int least_period = 1;
  MultiplierSet multipliers;
  StabilityClass stability = StabilityClass::Nonhyperbolic;
  double residual = 0.0;  // max over cycle points of |psi^p(x) - x|
};

struct FindDiagnostics {
  std::int64_t seeds = 0;
  std::int64_t accepted = 0;
  std::int64_t singular_failures = 0;
  std::int64_t escape_failures = 0;
  std::int64_t no_convergence = 0;
  std::int64_t out_of_region = 0;
  std::int64_t duplicates_merged = 0;
};

struct OrbitCatalog {
  std::string map_tag;
  int map_dim = 1;
  int max_period = 1;
  PhaseDomain region;
  double tol = 1e-10;
  double dedup_radius = 1e-6;
  std::vector<PeriodicOrbit> orbits;  // sorted by least period, then first coordinate
  FindDiagnostics diagnostics;

  std::vector<int> least_periods_present() const;
};

struct NewtonResult {
  enum class Status { Converged, SingularJacobian, Escaped, NoConvergence };
  Status status = Status::NoConvergence;
  Point point;
  double residual = 0.0;
  int iterations = 0;

  bool ok() const { return status == Status::Converged; }
};

// Damped Newton on F(x) = psi^p(x) - x; fails on |det(Dpsi^p - I)| < 1e-12
// (a nonhyperbolic cycle or bifurcation point nearby) and on divergence.
NewtonResult newton_refine(const MapSystem& map, const Point& x0, int period, double tol = 1e-10,
                           int max_iter = 50);

// Forward iteration of psi^p; converges exactly where Newton's F-Jacobian
// degenerates (superattracting transversals, rotation-neutral directions).
NewtonResult forward_refine(const MapSystem& map, const Point& x0, int period, double tol = 1e-10,
                            int max_rounds = 200);

// Multipliers of the p-cycle through x. On the sphere's chart-singular poles
// the linearization is the phi-derivative composed with the theta-rotation,
// giving the conjugate pair d e^{+-i lambda} in place of the chart Jacobian.
MultiplierSet orbit_multipliers(const MapSystem& map, const Point& x, int period);

StabilityClass classify_multipliers(const MultiplierSet& m, double hyperbolicity_band = 1e-6);
StabilityClass classify_orbit(const MapSystem& map, const PeriodicOrbit& orbit,
                              double hyperbolicity_band = 1e-6);

// Least period of the (numerically) p-periodic point x: the smallest divisor
// q of p whose residual stays below 10*tol.
int least_period_of(const MapSystem& map, const Point& x, int period, double tol);

// Grid-seeded search: Newton refinement per period with a forward-iteration
// fallback for cycles Newton cannot hold (superattracting transversals and
// the rotation-neutral sphere directions), deduplication, classification.
OrbitCatalog find_periodic(const MapSystem& map, const PhaseDomain& region, int max_period,
                           int grid_per_axis, double tol = 1e-10, int threads = 1);

OrbitCatalog find_periodic(const MapSystem& map, int max_period, int grid_per_axis,
                           double tol = 1e-10, int threads = 1);

}  // namespace nonwander
