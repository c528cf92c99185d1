#include "nonwander/cascade.hpp"

#include <cmath>

#include "nonwander/errors.hpp"

namespace nonwander {

namespace {

MapSystem map_at(MapFamily family, const ParamSet& fixed, double scan) {
  ParamSet p = fixed;
  switch (family) {
    case MapFamily::Quadratic:
      p.a = scan;
      return MapSystem::quadratic(scan);
    case MapFamily::Henon:
      return MapSystem::henon(scan, fixed.b);
    default:
      throw std::invalid_argument(
          "cascade scans are defined for the quadratic and henon families");
  }
}

Point natural_start(const MapSystem& map) {
  if (map.dim() == 1) return Point::of(0.0);  // critical point of a - x^2
  return Point::of(0.0, 0.0);
}

// Attractor of the map near start: transient iteration, then first-return
// cycle detection. Returns a cycle point and its detected period.
std::optional<std::pair<Point, int>> attractor_cycle(const MapSystem& map, const Point& start,
                                                     int max_detect) {
  Point z = start;
  long transient = 4000;
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      z = map.iterate(z, transient);
      Point w = z;
      for (int k = 1; k <= max_detect; ++k) {
        w = map.eval(w);
        if (!w.finite() || w.inf_norm() > map.escape_radius()) return std::nullopt;
        if (map.domain().wrap_distance(w, z) < 1e-6) return std::make_pair(z, k);
      }
    } catch (const EscapeError&) {
      return std::nullopt;
    }
    transient *= 8;  // slow convergence near a flip
  }
  return std::nullopt;
}

// Refined p-cycle point with least period exactly p, or nothing.
std::optional<Point> refine_cycle(const MapSystem& map, const Point& seed, int period,
                                  double tol) {
  const double scale = 1.0 + seed.inf_norm();
  const double offsets[] = {0.0, 1e-8, -1e-8, 1e-5, -1e-5, 1e-3, -1e-3};
  for (double off : offsets) {
    Point s = seed;
    for (int i = 0; i < s.dim; ++i) s[i] += off * scale;
    NewtonResult nr = newton_refine(map, s, period, tol);
    if (!nr.ok()) continue;
    if (least_period_of(map, nr.point, period, tol) != period) continue;
    return nr.point;
  }
  return std::nullopt;
}

// Locate a cycle of least period exactly p: tracked point first, then the
// attractor, then a seed grid sweep.
std::optional<Point> find_cycle(const MapSystem& map, int period, double tol,
                                const std::optional<Point>& tracked) {
  if (tracked) {
    if (auto r = refine_cycle(map, *tracked, period, tol)) return r;
  }
  if (auto att = attractor_cycle(map, natural_start(map), 4 * period + 8)) {
    if (att->second == period) {
      if (auto r = refine_cycle(map, att->first, period, tol)) return r;
    }
  }
  const PhaseDomain& dom = map.domain();
  const int g = map.dim() == 1 ? 64 : 24;
  std::vector<Point> seeds;
  if (map.dim() == 1) {
    for (int i = 0; i < g; ++i)
      seeds.push_back(Point::of(dom.axes[0].lo + dom.axes[0].length() * (i + 0.5) / g));
  } else {
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j)
        seeds.push_back(Point::of(dom.axes[0].lo + dom.axes[0].length() * (i + 0.5) / g,
                                  dom.axes[1].lo + dom.axes[1].length() * (j + 0.5) / g));
  }
  for (const Point& s : seeds) {
    NewtonResult nr = newton_refine(map, s, period, tol);
    if (!nr.ok()) continue;
    if (least_period_of(map, nr.point, period, tol) != period) continue;
    return nr.point;
  }
  return std::nullopt;
}

// Tracks one cycle across parameter values for bisection.
struct CycleTracker {
  MapFamily family;
  ParamSet fixed;
  int period;
  double tol;
  std::optional<Point> last;

  MultiplierSet multipliers_at(double a) {
    const MapSystem map = map_at(family, fixed, a);
    auto pt = find_cycle(map, period, tol, last);
    if (!pt)
      throw NumericalError("lost the " + std::to_string(period) + "-cycle at parameter " +
                           std::to_string(a));
    last = *pt;
    return orbit_multipliers(map, *pt, period);
  }
};

double bisect_sign(const std::function<int(double)>& sign_at, double lo, double hi, double tol,
                   int s_lo, int s_hi) {
  if (s_lo == s_hi) throw BracketError("no sign change in bracket");
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;  // double precision floor
    if (sign_at(mid) == s_lo)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2.0;
}

}  // namespace

double CascadeTable::flip(int n) const {
  for (const auto& e : entries)
    if (e.n == n) return e.flip_param;
  throw std::out_of_range("cascade table has no entry for level " + std::to_string(n));
}

MultiplierSet cycle_multiplier(MapFamily family, const ParamSet& params, int period,
                               const Point& seed, double tol) {
  if (period < 1) throw std::invalid_argument("cycle_multiplier requires period >= 1");
  const MapSystem map = MapSystem::make(family, params);
  NewtonResult nr = newton_refine(map, seed, period, tol);
  if (!nr.ok()) {
    // superattracting or neutral cycles: accept the seed when it already
    // closes up, as Newton has nothing to improve there
    NewtonResult fb = forward_probe(map, seed, period, tol);
    if (!fb.ok())
      throw NumericalError("cycle refinement failed near the given seed (period " +
                           std::to_string(period) + ")");
    nr = fb;
  }
  return orbit_multipliers(map, nr.point, period);
}

double locate_flip(MapFamily family, const ParamSet& fixed, int period,
                   std::pair<double, double> bracket, double tol) {
  if (period < 1) throw std::invalid_argument("locate_flip requires period >= 1");
  if (!(bracket.first < bracket.second)) throw std::invalid_argument("empty bracket");
  if (tol <= 0.0) throw std::invalid_argument("locate_flip requires tol > 0");
  CycleTracker tracker{family, fixed, period, 1e-12, std::nullopt};
  auto value = [&](double a) { return tracker.multipliers_at(a).dominant().real() + 1.0; };
  auto sign_at = [&](double a) { return value(a) <= 0.0 ? -1 : 1; };
  const int s_lo = sign_at(bracket.first);
  const int s_hi = sign_at(bracket.second);
  return bisect_sign(sign_at, bracket.first, bracket.second, tol, s_lo, s_hi);
}

double locate_saddle_node(MapFamily family, const ParamSet& fixed,
                          std::pair<double, double> bracket, double tol) {
  if (!(bracket.first < bracket.second)) throw std::invalid_argument("empty bracket");
  if (tol <= 0.0) throw std::invalid_argument("locate_saddle_node requires tol > 0");
  std::optional<Point> tracked;
  // sign: -1 when a fixed point with dominant multiplier below +1 exists
  // (the node branch born at the fold), +1 otherwise
  auto sign_at = [&](double a) {
    const MapSystem map = map_at(family, fixed, a);
    double best = std::numeric_limits<double>::infinity();
    std::vector<Point> seeds;
    if (tracked) {
      seeds.push_back(*tracked);
      Point j = *tracked;
      for (int i = 0; i < j.dim; ++i) j[i] += 1e-4 * (1.0 + j.inf_norm());
      seeds.push_back(j);
    }
    const PhaseDomain& dom = map.domain();
    const int g = map.dim() == 1 ? 32 : 12;
    if (map.dim() == 1) {
      for (int i = 0; i < g; ++i)
        seeds.push_back(Point::of(dom.axes[0].lo + dom.axes[0].length() * (i + 0.5) / g));
    } else {
      for (int i = 0; i < g; ++i)
        for (int jj = 0; jj < g; ++jj)
          seeds.push_back(Point::of(dom.axes[0].lo + dom.axes[0].length() * (i + 0.5) / g,
                                    dom.axes[1].lo + dom.axes[1].length() * (jj + 0.5) / g));
    }
    std::optional<Point> best_pt;
    for (const Point& s : seeds) {
      NewtonResult nr = newton_refine(map, s, 1, 1e-12);
      if (!nr.ok()) continue;
      const double re = orbit_multipliers(map, nr.point, 1).dominant().real();
      if (re < best) {
        best = re;
        best_pt = nr.point;
      }
    }
    if (best_pt && best < 1.0) {
      tracked = best_pt;
      return -1;
    }
    return 1;
  };
  const int s_lo = sign_at(bracket.first);
  const int s_hi = sign_at(bracket.second);
  return bisect_sign(sign_at, bracket.first, bracket.second, tol, s_lo, s_hi);
}

CascadeTable build_cascade(MapFamily family, const ParamSet& fixed, int n_max) {
  if (n_max < 1 || n_max > 8)
    throw std::invalid_argument("n_max must lie in [1, 8]; flip gaps drown in double "
                                "precision beyond that");
  if (family != MapFamily::Quadratic && family != MapFamily::Henon)
    throw std::invalid_argument("cascade tables are built for the quadratic and henon families");

  CascadeTable table;
  table.family = family;
  if (family == MapFamily::Henon) table.fixed_b = fixed.b;

  // scale of the first window; exact for the quadratic family, and the
  // henon fold/flip pair scales the same way in (1+b)^2
  const double width = family == MapFamily::Henon ? (1.0 + std::abs(fixed.b)) * (1.0 + std::abs(fixed.b))
                                                  : 1.0;
  table.saddle_node = locate_saddle_node(family, fixed, {-width, 0.0});

  const double tol = 1e-11;
  double prev_flip = table.saddle_node;
  double gap_estimate = width;  // fold-to-first-flip distance
  CycleTracker tracker{family, fixed, 1, 1e-12, std::nullopt};

  for (int n = 1; n <= n_max; ++n) {
    const int period = 1 << (n - 1);  // cycle whose flip births the 2^n-cycle
    tracker.period = period;
    double a = prev_flip + 0.02 * gap_estimate;
    double step = gap_estimate / 16.0;
    try {
      if (n > 1) {
        // fresh doubled branch: seed from the attractor just past the flip
        const MapSystem map = map_at(family, fixed, a);
        std::optional<Point> cyc = find_cycle(map, period, tol, tracker.last);
        if (!cyc) throw NumericalError("could not seed the doubled cycle");
        tracker.last = cyc;
      }
      double v = tracker.multipliers_at(a).dominant().real() + 1.0;
      if (v <= 0.0) throw BracketError("walk started past the flip");
      double a_prev = a;
      int steps = 0;
      while (v > 0.0) {
        if (++steps > 4000) throw BracketError("no multiplier crossing found");
        a_prev = a;
        a += step;
        v = tracker.multipliers_at(a).dominant().real() + 1.0;
      }
      auto sign_at = [&](double x) {
        return tracker.multipliers_at(x).dominant().real() + 1.0 <= 0.0 ? -1 : 1;
      };
      const double f = bisect_sign(sign_at, a_prev, a, tol, 1, -1);
      if (f <= prev_flip) throw NumericalError("flip sequence not increasing");
      table.entries.push_back(CascadeEntry{n, 1 << n, f});
      gap_estimate = n == 1 ? (f - table.saddle_node) / 2.0 : (f - prev_flip) / 4.5;
      prev_flip = f;
    } catch (const NumericalError& err) {
      table.truncated = true;
      table.truncation_reason = err.what();
      break;
    }
  }

  for (std::size_t i = 2; i < table.entries.size(); ++i) {
    const double g_prev = table.entries[i - 1].flip_param - table.entries[i - 2].flip_param;
    const double g_next = table.entries[i].flip_param - table.entries[i - 1].flip_param;
    table.gap_ratios.push_back(g_prev / g_next);
  }
  if (!table.gap_ratios.empty() && table.gap_ratios.back() > 1.0) {
    const std::size_t k = table.entries.size() - 1;
    const double gap = table.entries[k].flip_param - table.entries[k - 1].flip_param;
    table.accumulation = table.entries[k].flip_param + gap / (table.gap_ratios.back() - 1.0);
  }
  return table;
}

}  // namespace nonwander
