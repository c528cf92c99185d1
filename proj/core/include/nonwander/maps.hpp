#pragma once

#include <array>
#include <optional>
#include <string>

#include "nonwander/geometry.hpp"

namespace nonwander {

enum class MapFamily { Quadratic, Logistic, Henon, Sphere, Identity };

std::string family_name(MapFamily f);
std::optional<MapFamily> family_from_name(const std::string& name);

// Named parameters; each family reads its own subset.
struct ParamSet {
  double a = 0.0;
  double b = 0.0;
  double lambda = 0.0;
};

// A parameterized self-map of a rectangular phase domain with exact
// evaluation and Jacobian rules.
//
//   quadratic  x -> a - x^2                         on its invariant interval
//   logistic   x -> lambda x (1 - x)                on [0,1]
//   henon      (x,y) -> (a - x^2 - b y, x)          working region [-3,3]^2
//   sphere     (theta,phi) -> (theta + lambda,
//               (4/pi^2)(phi - pi/2)^3 + pi/2)      theta wraps on [0,2pi)
//   identity   x -> x                               (testing aid)
class MapSystem {
 public:
  static MapSystem quadratic(double a);
  static MapSystem quadratic(double a, double margin);
  static MapSystem logistic(double lambda);
  static MapSystem henon(double a, double b);
  static MapSystem henon(double a, double b, const PhaseDomain& region);
  static MapSystem sphere(double lambda);
  static MapSystem identity1d();
  static MapSystem identity(const PhaseDomain& domain);
  // Generic factory used by the CLI / cascade scans.
  static MapSystem make(MapFamily family, const ParamSet& params);

  MapFamily family() const { return family_; }
  const ParamSet& params() const { return params_; }
  const PhaseDomain& domain() const { return domain_; }
  int dim() const { return domain_.dim; }
  bool invertible() const { return invertible_; }
  double escape_radius() const { return escape_radius_; }

  // Stable identity string, e.g. "henon[a=1.4,b=0.3]"; used to refuse
  // cross-map comparisons between catalogs and recurrent sets.
  std::string identity_tag() const;

  // One application of the map; wrap axes renormalized.
  Point eval(const Point& x) const;

  // Henon only (b != 0): H^-1(x,y) = (y, (a - y^2 - x)/b).
  Point inverse_eval(const Point& x) const;

  // Exact analytic Jacobian at x.
  Mat jacobian(const Point& x) const;

  // n-fold composition; n = 0 is the identity. Throws EscapeError when the
  // orbit exceeds the escape radius instead of overflowing.
  Point iterate(const Point& x, long n) const;

  // Chain-rule product J(psi^{p-1} x) ... J(x), right to left; p >= 1.
  Mat jacobian_along_orbit(const Point& x, long p) const;

  // Supremum of the row sums of |J| over the axis-aligned box [lo,hi],
  // per row; drives the transition-sampling padding.
  std::array<double, 2> jacobian_row_bounds(const Point& lo, const Point& hi) const;

  // True when x sits on the sphere chart's singular rows (phi = 0 or pi).
  bool at_pole(const Point& x, double tol = 1e-9) const;

 private:
  MapSystem() = default;
  void validate_point(const Point& x) const;

  MapFamily family_ = MapFamily::Identity;
  ParamSet params_{};
  PhaseDomain domain_{};
  bool invertible_ = false;
  double escape_radius_ = 1e8;
};

}  // namespace nonwander
