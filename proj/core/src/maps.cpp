#include "nonwander/maps.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "nonwander/errors.hpp"

namespace nonwander {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string("parameter ") + name + " must be finite");
}

}  // namespace

std::string family_name(MapFamily f) {
  switch (f) {
    case MapFamily::Quadratic: return "quadratic";
    case MapFamily::Logistic: return "logistic";
    case MapFamily::Henon: return "henon";
    case MapFamily::Sphere: return "sphere";
    case MapFamily::Identity: return "identity";
  }
  return "unknown";
}

std::optional<MapFamily> family_from_name(const std::string& name) {
  if (name == "quadratic") return MapFamily::Quadratic;
  if (name == "logistic") return MapFamily::Logistic;
  if (name == "henon") return MapFamily::Henon;
  if (name == "sphere") return MapFamily::Sphere;
  if (name == "identity") return MapFamily::Identity;
  return std::nullopt;
}

MapSystem MapSystem::quadratic(double a) { return quadratic(a, 0.0); }

MapSystem MapSystem::quadratic(double a, double margin) {
  require_finite(a, "a");
  require_finite(margin, "margin");
  MapSystem m;
  m.family_ = MapFamily::Quadratic;
  m.params_.a = a;
  // Invariant interval [-x_rep, x_rep], x_rep the modulus of the repelling
  // fixed point; below the first fixed point no invariant interval exists
  // and a unit interval keeps seeding well-defined.
  const double disc = 1.0 + 4.0 * a;
  const double xr = disc >= 0.0 ? (1.0 + std::sqrt(disc)) / 2.0 : 1.0;
  m.domain_ = PhaseDomain::interval(-xr - margin, xr + margin);
  m.invertible_ = false;
  return m;
}

MapSystem MapSystem::logistic(double lambda) {
  require_finite(lambda, "lambda");
  MapSystem m;
  m.family_ = MapFamily::Logistic;
  m.params_.lambda = lambda;
  m.domain_ = PhaseDomain::interval(0.0, 1.0);
  m.invertible_ = false;
  return m;
}

MapSystem MapSystem::henon(double a, double b) {
  return henon(a, b, PhaseDomain::rectangle(-3.0, 3.0, -3.0, 3.0));
}

MapSystem MapSystem::henon(double a, double b, const PhaseDomain& region) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (region.dim != 2) throw std::invalid_argument("henon region must be 2-D");
  MapSystem m;
  m.family_ = MapFamily::Henon;
  m.params_.a = a;
  m.params_.b = b;
  m.domain_ = region;
  m.invertible_ = b != 0.0;
  return m;
}

MapSystem MapSystem::sphere(double lambda) {
  require_finite(lambda, "lambda");
  MapSystem m;
  m.family_ = MapFamily::Sphere;
  m.params_.lambda = lambda;
  m.domain_ = PhaseDomain::cylinder(0.0, 2.0 * kPi, 0.0, kPi);
  m.invertible_ = true;
  return m;
}

MapSystem MapSystem::identity1d() { return identity(PhaseDomain::interval(0.0, 1.0)); }

MapSystem MapSystem::identity(const PhaseDomain& domain) {
  MapSystem m;
  m.family_ = MapFamily::Identity;
  m.domain_ = domain;
  m.invertible_ = true;
  return m;
}

MapSystem MapSystem::make(MapFamily family, const ParamSet& params) {
  switch (family) {
    case MapFamily::Quadratic: return quadratic(params.a);
    case MapFamily::Logistic: return logistic(params.lambda);
    case MapFamily::Henon: return henon(params.a, params.b);
    case MapFamily::Sphere: return sphere(params.lambda);
    case MapFamily::Identity: return identity1d();
  }
  throw std::invalid_argument("unknown map family");
}

std::string MapSystem::identity_tag() const {
  switch (family_) {
    case MapFamily::Quadratic: return "quadratic[a=" + fmt_param(params_.a) + "]";
    case MapFamily::Logistic: return "logistic[lambda=" + fmt_param(params_.lambda) + "]";
    case MapFamily::Henon:
      return "henon[a=" + fmt_param(params_.a) + ",b=" + fmt_param(params_.b) + "]";
    case MapFamily::Sphere: return "sphere[lambda=" + fmt_param(params_.lambda) + "]";
    case MapFamily::Identity: return "identity[dim=" + std::to_string(domain_.dim) + "]";
  }
  return "unknown";
}

void MapSystem::validate_point(const Point& x) const {
  if (x.dim != domain_.dim)
    throw std::invalid_argument("point dimension does not match the map domain");
  if (!x.finite()) throw std::invalid_argument("non-finite input point");
}

Point MapSystem::eval(const Point& x) const {
  validate_point(x);
  switch (family_) {
    case MapFamily::Quadratic:
      return Point::of(params_.a - x[0] * x[0]);
    case MapFamily::Logistic:
      return Point::of(params_.lambda * x[0] * (1.0 - x[0]));
    case MapFamily::Henon:
      return Point::of(params_.a - x[0] * x[0] - params_.b * x[1], x[0]);
    case MapFamily::Sphere: {
      const double u = x[1] - kPi / 2.0;
      double phi = (4.0 / (kPi * kPi)) * u * u * u + kPi / 2.0;
      // the cubic maps [0,pi] into itself; clip rounding at the endpoints
      if (phi < 0.0) phi = 0.0;
      if (phi > kPi) phi = kPi;
      return domain_.normalize(Point::of(x[0] + params_.lambda, phi));
    }
    case MapFamily::Identity:
      return domain_.normalize(x);
  }
  throw std::logic_error("unreachable");
}

Point MapSystem::inverse_eval(const Point& x) const {
  if (family_ != MapFamily::Henon)
    throw std::invalid_argument("inverse_eval is defined for the henon family only");
  if (!invertible_)
    throw std::invalid_argument("henon map with b = 0 is not invertible");
  validate_point(x);
  return Point::of(x[1], (params_.a - x[1] * x[1] - x[0]) / params_.b);
}

Mat MapSystem::jacobian(const Point& x) const {
  validate_point(x);
  Mat j;
  switch (family_) {
    case MapFamily::Quadratic:
      return Mat::scalar1(-2.0 * x[0]);
    case MapFamily::Logistic:
      return Mat::scalar1(params_.lambda * (1.0 - 2.0 * x[0]));
    case MapFamily::Henon:
      j.dim = 2;
      j.at(0, 0) = -2.0 * x[0];
      j.at(0, 1) = -params_.b;
      j.at(1, 0) = 1.0;
      j.at(1, 1) = 0.0;
      return j;
    case MapFamily::Sphere: {
      const double u = x[1] - kPi / 2.0;
      j.dim = 2;
      j.at(0, 0) = 1.0;
      j.at(0, 1) = 0.0;
      j.at(1, 0) = 0.0;
      j.at(1, 1) = (12.0 / (kPi * kPi)) * u * u;
      return j;
    }
    case MapFamily::Identity:
      return Mat::identity(domain_.dim);
  }
  throw std::logic_error("unreachable");
}

Point MapSystem::iterate(const Point& x, long n) const {
  if (n < 0) throw std::invalid_argument("iterate requires n >= 0");
  validate_point(x);
  Point y = domain_.normalize(x);
  for (long k = 0; k < n; ++k) {
    y = eval(y);
    if (!y.finite() || y.inf_norm() > escape_radius_) throw EscapeError(k + 1);
  }
  return y;
}

Mat MapSystem::jacobian_along_orbit(const Point& x, long p) const {
  if (p < 1) throw std::invalid_argument("jacobian_along_orbit requires p >= 1");
  validate_point(x);
  Point y = domain_.normalize(x);
  Mat prod = Mat::identity(domain_.dim);
  for (long k = 0; k < p; ++k) {
    prod = jacobian(y).times(prod);
    y = eval(y);
    if (!y.finite() || y.inf_norm() > escape_radius_) throw EscapeError(k + 1);
  }
  return prod;
}

std::array<double, 2> MapSystem::jacobian_row_bounds(const Point& lo, const Point& hi) const {
  const double xmax = std::max(std::abs(lo[0]), std::abs(hi[0]));
  switch (family_) {
    case MapFamily::Quadratic:
      return {2.0 * xmax, 0.0};
    case MapFamily::Logistic: {
      const double d = std::abs(params_.lambda) *
                       std::max(std::abs(1.0 - 2.0 * lo[0]), std::abs(1.0 - 2.0 * hi[0]));
      return {d, 0.0};
    }
    case MapFamily::Henon:
      return {2.0 * xmax + std::abs(params_.b), 1.0};
    case MapFamily::Sphere: {
      const double u = std::max(std::abs(lo[1] - kPi / 2.0), std::abs(hi[1] - kPi / 2.0));
      return {1.0, (12.0 / (kPi * kPi)) * u * u};
    }
    case MapFamily::Identity:
      return {1.0, 1.0};
  }
  throw std::logic_error("unreachable");
}

bool MapSystem::at_pole(const Point& x, double tol) const {
  if (family_ != MapFamily::Sphere) return false;
  return x[1] <= tol || x[1] >= kPi - tol;
}

}  // namespace nonwander
