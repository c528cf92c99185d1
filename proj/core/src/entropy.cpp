#include "nonwander/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "nonwander/errors.hpp"

namespace nonwander {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// One pass over the grid accumulating lap counts of all iterates 1..n_max.
std::vector<std::int64_t> lap_counts_upto(const MapSystem& map, int n_max,
                                          std::int64_t grid_points) {
  const Axis ax = map.domain().axes[0];
  const double w = ax.length();
  std::vector<int> last_sign(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<std::int64_t> flips(static_cast<std::size_t>(n_max) + 1, 0);
  for (std::int64_t j = 0; j < grid_points; ++j) {
    // cell centers avoid landing exactly on the critical point or endpoints
    Point y = Point::of(ax.lo + (static_cast<double>(j) + 0.5) * w / static_cast<double>(grid_points));
    int s = 1;
    for (int k = 1; k <= n_max; ++k) {
      const int ds = sign_of(map.jacobian(y).at(0, 0));
      s = s == 0 ? 0 : s * ds;
      y = map.eval(y);
      if (!y.finite() || y.inf_norm() > map.escape_radius()) throw EscapeError(k);
      if (s != 0) {
        auto ks = static_cast<std::size_t>(k);
        if (last_sign[ks] != 0 && s != last_sign[ks]) ++flips[ks];
        last_sign[ks] = s;
      }
    }
  }
  std::vector<std::int64_t> laps(static_cast<std::size_t>(n_max));
  for (int k = 1; k <= n_max; ++k) laps[static_cast<std::size_t>(k) - 1] = flips[static_cast<std::size_t>(k)] + 1;
  return laps;
}

}  // namespace

std::int64_t lap_count(const MapSystem& map1d, int n, std::int64_t grid_points) {
  if (map1d.dim() != 1) throw std::invalid_argument("lap counting requires a 1-D map");
  if (n < 1) throw std::invalid_argument("lap_count requires n >= 1");
  if (grid_points < 2) throw std::invalid_argument("lap_count requires at least 2 grid points");
  return lap_counts_upto(map1d, n, grid_points).back();
}

LapEntropyResult lap_entropy(const MapSystem& map1d, int iterations, int sample_density) {
  if (map1d.dim() != 1) throw std::invalid_argument("lap entropy requires a 1-D map");
  if (iterations < 2) throw std::invalid_argument("lap_entropy requires iterations >= 2");
  if (sample_density < 4 || sample_density > 30)
    throw std::invalid_argument("sample_density must lie in [4, 30]");

  const std::int64_t n_fine = std::int64_t{1} << sample_density;
  LapEntropyResult res;
  res.lap_counts = lap_counts_upto(map1d, iterations, n_fine);
  const auto coarse = lap_counts_upto(map1d, iterations, n_fine / 2);
  for (std::size_t k = 0; k < res.lap_counts.size(); ++k) {
    const double fine = static_cast<double>(res.lap_counts[k]);
    if (std::abs(fine - static_cast<double>(coarse[k])) > 0.01 * fine) {
      res.refinement_warning = true;
      break;
    }
  }

  // least-squares slope of log(laps) against n over the last half
  const int n_lo = iterations / 2 + 1;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int n = n_lo; n <= iterations; ++n) {
    const double x = n;
    const double y = std::log(static_cast<double>(res.lap_counts[static_cast<std::size_t>(n) - 1]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  double slope = 0.0;
  const double denom = cnt * sxx - sx * sx;
  if (cnt >= 2 && denom > 0.0) slope = (cnt * sxy - sx * sy) / denom;
  res.entropy = std::max(slope, 0.0);
  return res;
}

}  // namespace nonwander
