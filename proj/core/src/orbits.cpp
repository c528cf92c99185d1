#include "nonwander/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "nonwander/errors.hpp"
#include "nonwander/parallel.hpp"

namespace nonwander {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSingularDet = 1e-12;

double period_residual(const MapSystem& map, const Point& x, int p) {
  return map.domain().wrap_distance(map.iterate(x, p), x);
}

// Forward iteration of psi^p; converges exactly where Newton's F-Jacobian
// degenerates (superattracting transversals, rotation-neutral directions).
NewtonResult forward_refine(const MapSystem& map, const Point& x0, int p, double tol,
                            int max_rounds = 200) {
  NewtonResult res;
  Point x = map.domain().normalize(x0);
  double r;
  try {
    r = period_residual(map, x, p);
  } catch (const EscapeError&) {
    res.status = NewtonResult::Status::Escaped;
    return res;
  }
  double best = r;
  int stagnant = 0;
  for (int round = 0; round < max_rounds; ++round) {
    if (r < tol) {
      res.status = NewtonResult::Status::Converged;
      res.point = x;
      res.residual = r;
      res.iterations = round;
      return res;
    }
    try {
      x = map.iterate(x, p);
      r = period_residual(map, x, p);
    } catch (const EscapeError&) {
      res.status = NewtonResult::Status::Escaped;
      return res;
    }
    if (r < 0.9 * best) {
      best = r;
      stagnant = 0;
    } else if (++stagnant >= 5) {
      break;  // plateau: not contracting toward a p-cycle
    }
  }
  res.status = NewtonResult::Status::NoConvergence;
  res.point = x;
  res.residual = r;
  return res;
}

bool cycle_in_region(const MapSystem& map, const PhaseDomain& region, const Point& x, int p) {
  Point y = x;
  for (int i = 0; i < p; ++i) {
    if (!region.contains(y, 1e-7)) return false;
    y = map.eval(y);
  }
  return true;
}

Point canonical_point(const MapSystem& map, Point x) {
  if (map.at_pole(x)) x[0] = 0.0;  // theta is meaningless on the chart's pole rows
  return map.domain().normalize(x);
}

struct Candidate {
  Point point;
  int least_period = 1;
  double residual = 0.0;
};

// Smallest cycle point in lexicographic order, for stable catalog sorting.
Point orbit_key_point(const PeriodicOrbit& o) {
  Point best = o.points.front();
  for (const Point& p : o.points) {
    for (int i = 0; i < p.dim; ++i) {
      if (p[i] < best[i] - 1e-12) {
        best = p;
        break;
      }
      if (p[i] > best[i] + 1e-12) break;
    }
  }
  return best;
}

bool orbits_share_point(const PhaseDomain& dom, const PeriodicOrbit& a, const PeriodicOrbit& b,
                        double radius) {
  for (const Point& pa : a.points)
    for (const Point& pb : b.points)
      if (dom.wrap_distance(pa, pb) < radius) return true;
  return false;
}

}  // namespace

std::string stability_name(StabilityClass s) {
  switch (s) {
    case StabilityClass::Attracting: return "attracting";
    case StabilityClass::Repelling: return "repelling";
    case StabilityClass::Saddle: return "saddle";
    case StabilityClass::Nonhyperbolic: return "nonhyperbolic";
  }
  return "unknown";
}

std::vector<int> OrbitCatalog::least_periods_present() const {
  std::vector<int> out;
  for (const auto& o : orbits) out.push_back(o.least_period);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NewtonResult newton_refine(const MapSystem& map, const Point& x0, int period, double tol,
                           int max_iter) {
  if (period < 1) throw std::invalid_argument("newton_refine requires period >= 1");
  if (tol <= 0.0) throw std::invalid_argument("newton_refine requires tol > 0");
  const PhaseDomain& dom = map.domain();
  NewtonResult res;
  Point x = dom.normalize(x0);
  double r;
  try {
    r = period_residual(map, x, period);
  } catch (const EscapeError&) {
    res.status = NewtonResult::Status::Escaped;
    return res;
  }
  for (int iter = 0; iter < max_iter; ++iter) {
    if (r < tol) {
      res.status = NewtonResult::Status::Converged;
      res.point = x;
      res.residual = r;
      res.iterations = iter;
      return res;
    }
    Mat jf;
    Point fx;
    try {
      jf = map.jacobian_along_orbit(x, period);
      fx = dom.difference(map.iterate(x, period), x);
    } catch (const EscapeError&) {
      res.status = NewtonResult::Status::Escaped;
      return res;
    }
    for (int i = 0; i < jf.dim; ++i) jf.at(i, i) -= 1.0;
    if (std::abs(jf.det()) < kSingularDet) {
      res.status = NewtonResult::Status::SingularJacobian;
      res.point = x;
      res.residual = r;
      res.iterations = iter;
      return res;
    }
    const Point step = jf.solve(-1.0 * fx);
    // step halving until the residual decreases
    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= 20; ++h) {
      const Point xn = dom.normalize(x + t * step);
      double rn;
      try {
        rn = period_residual(map, xn, period);
      } catch (const EscapeError&) {
        t /= 2.0;
        continue;
      }
      if (rn < r) {
        x = xn;
        r = rn;
        accepted = true;
        break;
      }
      t /= 2.0;
    }
    if (!accepted) {
      res.status = r < tol ? NewtonResult::Status::Converged : NewtonResult::Status::NoConvergence;
      res.point = x;
      res.residual = r;
      res.iterations = iter;
      return res;
    }
  }
  res.status = r < tol ? NewtonResult::Status::Converged : NewtonResult::Status::NoConvergence;
  res.point = x;
  res.residual = r;
  return res;
}

MultiplierSet orbit_multipliers(const MapSystem& map, const Point& x, int period) {
  MultiplierSet out;
  if (map.at_pole(x)) {
    // chart singularity: expansion by the phi-derivative composed with the
    // rotation by lambda, a conjugate pair of modulus d^p
    const double d = map.jacobian(x).at(1, 1);
    const std::complex<double> base =
        d * std::complex<double>(std::cos(map.params().lambda), std::sin(map.params().lambda));
    const std::complex<double> mu = std::pow(base, period);
    out.mu[0] = mu;
    out.mu[1] = std::conj(mu);
    out.count = 2;
    return out;
  }
  const Mat jp = map.jacobian_along_orbit(x, period);
  out.mu = jp.eigenvalues();
  out.count = jp.dim;
  return out;
}

StabilityClass classify_multipliers(const MultiplierSet& m, double band) {
  bool all_inside = true;
  bool all_outside = true;
  for (int i = 0; i < m.count; ++i) {
    const double mod = std::abs(m.mu[i]);
    if (std::abs(mod - 1.0) <= band) return StabilityClass::Nonhyperbolic;
    if (mod >= 1.0) all_inside = false;
    if (mod <= 1.0) all_outside = false;
  }
  if (all_inside) return StabilityClass::Attracting;
  if (all_outside) return StabilityClass::Repelling;
  return StabilityClass::Saddle;
}

StabilityClass classify_orbit(const MapSystem& map, const PeriodicOrbit& orbit, double band) {
  return classify_multipliers(orbit_multipliers(map, orbit.points.front(), orbit.least_period),
                              band);
}

int least_period_of(const MapSystem& map, const Point& x, int period, double tol) {
  for (int q = 1; q < period; ++q) {
    if (period % q != 0) continue;
    if (period_residual(map, x, q) <= 10.0 * tol) return q;
  }
  return period;
}

OrbitCatalog find_periodic(const MapSystem& map, int max_period, int grid_per_axis, double tol,
                           int threads) {
  return find_periodic(map, map.domain(), max_period, grid_per_axis, tol, threads);
}

OrbitCatalog find_periodic(const MapSystem& map, const PhaseDomain& region, int max_period,
                           int grid_per_axis, double tol, int threads) {
  if (max_period < 1) throw std::invalid_argument("find_periodic requires max_period >= 1");
  if (grid_per_axis < 1) throw std::invalid_argument("find_periodic requires grid_per_axis >= 1");
  if (region.dim != map.dim()) throw std::invalid_argument("region dimension mismatch");

  OrbitCatalog cat;
  cat.map_tag = map.identity_tag();
  cat.map_dim = map.dim();
  cat.max_period = max_period;
  cat.region = region;
  cat.tol = tol;

  // seed grid: endpoints included on bounded axes, excluded on wrap axes
  std::vector<double> grid0, grid1;
  auto axis_grid = [&](const Axis& ax) {
    std::vector<double> g;
    if (ax.topology == AxisTopology::Wrap) {
      for (int i = 0; i < grid_per_axis; ++i)
        g.push_back(ax.lo + ax.length() * i / grid_per_axis);
    } else if (grid_per_axis == 1) {
      g.push_back((ax.lo + ax.hi) / 2.0);
    } else {
      for (int i = 0; i < grid_per_axis; ++i)
        g.push_back(ax.lo + ax.length() * i / (grid_per_axis - 1));
    }
    return g;
  };
  grid0 = axis_grid(region.axes[0]);
  if (region.dim == 2) grid1 = axis_grid(region.axes[1]);

  std::vector<Point> seeds;
  if (region.dim == 1) {
    for (double x : grid0) seeds.push_back(Point::of(x));
  } else {
    for (double x : grid0)
      for (double y : grid1) seeds.push_back(Point::of(x, y));
  }

  struct SlotDiag {
    std::int64_t singular = 0, escaped = 0, no_conv = 0, out_region = 0;
  };
  const std::int64_t n_seeds = static_cast<std::int64_t>(seeds.size());
  std::vector<std::vector<Candidate>> slot_cands(static_cast<std::size_t>(n_seeds));
  std::vector<SlotDiag> slot_diag(static_cast<std::size_t>(n_seeds));

  parallel_for(n_seeds, threads, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t s = b; s < e; ++s) {
      const Point seed = seeds[static_cast<std::size_t>(s)];
      auto& out = slot_cands[static_cast<std::size_t>(s)];
      auto& diag = slot_diag[static_cast<std::size_t>(s)];
      for (int p = 1; p <= max_period; ++p) {
        Point found;
        bool have = false;
        double r0;
        try {
          r0 = period_residual(map, seed, p);
        } catch (const EscapeError&) {
          ++diag.escaped;
          break;  // escaping seeds escape at every higher period too
        }
        if (r0 < tol) {
          found = map.domain().normalize(seed);
          have = true;
        } else {
          NewtonResult nr = newton_refine(map, seed, p, tol);
          if (nr.ok()) {
            found = nr.point;
            have = true;
          } else {
            if (nr.status == NewtonResult::Status::Escaped)
              ++diag.escaped;
            else if (nr.status == NewtonResult::Status::SingularJacobian)
              ++diag.singular;
            else
              ++diag.no_conv;
            NewtonResult fb = forward_refine(map, seed, p, tol);
            if (fb.ok()) {
              found = fb.point;
              have = true;
            }
          }
        }
        if (!have) continue;
        if (!cycle_in_region(map, region, found, p)) {
          ++diag.out_region;
          continue;
        }
        int q = least_period_of(map, found, p, tol);
        double rq = period_residual(map, found, q);
        if (rq >= tol) {
          // reduced period needs its own polish
          NewtonResult nq = newton_refine(map, found, q, tol);
          if (nq.ok()) {
            found = nq.point;
            rq = nq.residual;
          } else if (rq > 10.0 * tol) {
            ++diag.no_conv;
            continue;
          }
        }
        out.push_back(Candidate{canonical_point(map, found), q, rq});
      }
    }
  });

  for (const auto& d : slot_diag) {
    cat.diagnostics.singular_failures += d.singular;
    cat.diagnostics.escape_failures += d.escaped;
    cat.diagnostics.no_convergence += d.no_conv;
    cat.diagnostics.out_of_region += d.out_region;
  }
  cat.diagnostics.seeds = n_seeds;

  // materialize orbits in deterministic seed order, deduplicate by shared points
  std::vector<PeriodicOrbit> kept;
  for (const auto& slot : slot_cands) {
    for (const Candidate& c : slot) {
      PeriodicOrbit orb;
      orb.least_period = c.least_period;
      orb.points.reserve(static_cast<std::size_t>(c.least_period));
      Point y = c.point;
      bool bad = false;
      double resid = 0.0;
      try {
        for (int i = 0; i < c.least_period; ++i) {
          orb.points.push_back(canonical_point(map, y));
          resid = std::max(resid, period_residual(map, y, c.least_period));
          y = map.eval(y);
        }
      } catch (const EscapeError&) {
        bad = true;
      }
      if (bad) {
        ++cat.diagnostics.escape_failures;
        continue;
      }
      orb.residual = resid;

      bool duplicate = false;
      for (auto& k : kept) {
        if (!orbits_share_point(map.domain(), k, orb, cat.dedup_radius)) continue;
        duplicate = true;
        // same orbit: keep the sharper refinement; across periods the
        // smaller least period is the reduced, correct one
        const bool replace = orb.least_period < k.least_period ||
                             (orb.least_period == k.least_period && orb.residual < k.residual);
        if (replace) k = orb;
        break;
      }
      if (duplicate) {
        ++cat.diagnostics.duplicates_merged;
      } else {
        kept.push_back(std::move(orb));
      }
    }
  }

  for (auto& o : kept) {
    o.multipliers = orbit_multipliers(map, o.points.front(), o.least_period);
    o.stability = classify_multipliers(o.multipliers);
  }
  cat.diagnostics.accepted = static_cast<std::int64_t>(kept.size());

  std::sort(kept.begin(), kept.end(), [&](const PeriodicOrbit& a, const PeriodicOrbit& b) {
    if (a.least_period != b.least_period) return a.least_period < b.least_period;
    const Point ka = orbit_key_point(a);
    const Point kb = orbit_key_point(b);
    for (int i = 0; i < ka.dim; ++i) {
      if (ka[i] < kb[i]) return true;
      if (ka[i] > kb[i]) return false;
    }
    return false;
  });
  cat.orbits = std::move(kept);
  return cat;
}

}  // namespace nonwander
