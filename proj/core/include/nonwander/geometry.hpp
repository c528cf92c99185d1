#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace nonwander {

// Phase-space point; only dimensions 1 and 2 occur.
struct Point {
  std::array<double, 2> c{0.0, 0.0};
  int dim = 1;

  static Point of(double x) { return Point{{x, 0.0}, 1}; }
  static Point of(double x, double y) { return Point{{x, y}, 2}; }

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  bool finite() const {
    for (int i = 0; i < dim; ++i)
      if (!std::isfinite(c[static_cast<std::size_t>(i)])) return false;
    return true;
  }

  double inf_norm() const {
    double m = 0.0;
    for (int i = 0; i < dim; ++i) m = std::max(m, std::abs(c[static_cast<std::size_t>(i)]));
    return m;
  }
};

inline Point operator+(const Point& a, const Point& b) {
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r[i] += b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r[i] -= b[i];
  return r;
}

inline Point operator*(double s, const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dim; ++i) r[i] *= s;
  return r;
}

// Small dense square matrix, row-major, dim 1 or 2.
struct Mat {
  std::array<double, 4> m{0.0, 0.0, 0.0, 0.0};
  int dim = 1;

  static Mat identity(int d) {
    Mat r;
    r.dim = d;
    r.at(0, 0) = 1.0;
    if (d == 2) r.at(1, 1) = 1.0;
    return r;
  }
  static Mat scalar1(double v) {
    Mat r;
    r.dim = 1;
    r.at(0, 0) = v;
    return r;
  }

  double at(int r, int col) const { return m[static_cast<std::size_t>(r * 2 + col)]; }
  double& at(int r, int col) { return m[static_cast<std::size_t>(r * 2 + col)]; }

  double det() const {
    if (dim == 1) return at(0, 0);
    return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  }
  double trace() const { return dim == 1 ? at(0, 0) : at(0, 0) + at(1, 1); }

  // this * rhs
  Mat times(const Mat& rhs) const {
    Mat r;
    r.dim = dim;
    if (dim == 1) {
      r.at(0, 0) = at(0, 0) * rhs.at(0, 0);
      return r;
    }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.at(i, j) = at(i, 0) * rhs.at(0, j) + at(i, 1) * rhs.at(1, j);
    return r;
  }

  Point apply(const Point& x) const {
    Point r = x;
    if (dim == 1) {
      r[0] = at(0, 0) * x[0];
      return r;
    }
    r[0] = at(0, 0) * x[0] + at(0, 1) * x[1];
    r[1] = at(1, 0) * x[0] + at(1, 1) * x[1];
    return r;
  }

  // Solve A x = rhs by Cramer's rule; caller is responsible for checking det().
  Point solve(const Point& rhs) const {
    Point r = rhs;
    const double d = det();
    if (dim == 1) {
      r[0] = rhs[0] / d;
      return r;
    }
    r[0] = (rhs[0] * at(1, 1) - rhs[1] * at(0, 1)) / d;
    r[1] = (at(0, 0) * rhs[1] - at(1, 0) * rhs[0]) / d;
    return r;
  }

  // Eigenvalues; dim of them, real pair or conjugate pair for dim 2.
  std::array<std::complex<double>, 2> eigenvalues() const {
    std::array<std::complex<double>, 2> out{};
    if (dim == 1) {
      out[0] = at(0, 0);
      return out;
    }
    const double tr = trace();
    const double de = det();
    const double disc = tr * tr / 4.0 - de;
    if (disc >= 0.0) {
      const double s = std::sqrt(disc);
      out[0] = tr / 2.0 - s;
      out[1] = tr / 2.0 + s;
    } else {
      const double s = std::sqrt(-disc);
      out[0] = std::complex<double>(tr / 2.0, -s);
      out[1] = std::complex<double>(tr / 2.0, s);
    }
    return out;
  }
};

enum class AxisTopology { Bounded, Wrap };

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  AxisTopology topology = AxisTopology::Bounded;
  double length() const { return hi - lo; }
};

// Rectangular phase domain; wrap axes identify lo with hi.
struct PhaseDomain {
  int dim = 1;
  std::array<Axis, 2> axes{};

  static PhaseDomain interval(double lo, double hi) {
    check_axis(lo, hi);
    PhaseDomain d;
    d.dim = 1;
    d.axes[0] = Axis{lo, hi, AxisTopology::Bounded};
    return d;
  }
  static PhaseDomain rectangle(double lo0, double hi0, double lo1, double hi1) {
    check_axis(lo0, hi0);
    check_axis(lo1, hi1);
    PhaseDomain d;
    d.dim = 2;
    d.axes[0] = Axis{lo0, hi0, AxisTopology::Bounded};
    d.axes[1] = Axis{lo1, hi1, AxisTopology::Bounded};
    return d;
  }
  static PhaseDomain cylinder(double wrap_lo, double wrap_hi, double lo1, double hi1) {
    check_axis(wrap_lo, wrap_hi);
    check_axis(lo1, hi1);
    PhaseDomain d;
    d.dim = 2;
    d.axes[0] = Axis{wrap_lo, wrap_hi, AxisTopology::Wrap};
    d.axes[1] = Axis{lo1, hi1, AxisTopology::Bounded};
    return d;
  }

  // Wrap coordinates on wrap axes into [lo, hi); bounded axes untouched.
  Point normalize(const Point& x) const {
    Point r = x;
    for (int i = 0; i < dim; ++i) {
      const Axis& ax = axes[static_cast<std::size_t>(i)];
      if (ax.topology == AxisTopology::Wrap) {
        const double L = ax.length();
        double v = std::fmod(r[i] - ax.lo, L);
        if (v < 0.0) v += L;
        if (v >= L) v = 0.0;  // fmod rounding at the seam
        r[i] = ax.lo + v;
      }
    }
    return r;
  }

  bool contains(const Point& x, double tol = 0.0) const {
    for (int i = 0; i < dim; ++i) {
      const Axis& ax = axes[static_cast<std::size_t>(i)];
      if (ax.topology == AxisTopology::Wrap) continue;
      if (x[i] < ax.lo - tol || x[i] > ax.hi + tol) return false;
    }
    return true;
  }

  // a - b with the shortest wrap representative on wrap axes.
  Point difference(const Point& a, const Point& b) const {
    Point r = a - b;
    for (int i = 0; i < dim; ++i) {
      const Axis& ax = axes[static_cast<std::size_t>(i)];
      if (ax.topology == AxisTopology::Wrap) {
        const double L = ax.length();
        r[i] -= L * std::round(r[i] / L);
      }
    }
    return r;
  }

  double wrap_distance(const Point& a, const Point& b) const { return difference(a, b).inf_norm(); }

 private:
  static void check_axis(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("PhaseDomain: axis requires lo < hi");
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("PhaseDomain: axis bounds must be finite");
  }
};

}  // namespace nonwander
