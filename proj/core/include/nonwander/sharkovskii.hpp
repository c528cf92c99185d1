#pragma once

#include <cstdint>
#include <vector>

#include "nonwander/orbits.hpp"

namespace nonwander {

// Decomposition n = 2^exponent * odd_part used to compare periods in the
// Sharkovskii order: odd multiples (odd_part > 1) ordered by exponent then
// odd part, all preceding the pure powers of two, which descend to 1.
struct SharkovskiiKey {
  bool pure_power = false;
  int exponent = 0;
  std::int64_t odd_part = 1;

  static SharkovskiiKey of(std::int64_t n);
};

enum class SharkOrder { Precedes, Equals, Succeeds };

SharkOrder shark_compare(std::int64_t m, std::int64_t n);

// All m <= cap with n = m or n preceding m; requires cap >= n.
std::vector<std::int64_t> forced_periods(std::int64_t n, std::int64_t cap);

struct ForcingReport {
  bool pass = true;
  std::vector<std::int64_t> present;  // least periods found, restricted to [1,cap]
  std::vector<std::int64_t> missing;  // forced but absent
};

// Present least periods must form a forcing down-set up to cap.
ForcingReport check_forcing_closure(const OrbitCatalog& catalog, std::int64_t cap);

struct PowerOfTwoReport {
  bool pass = true;
  std::vector<std::int64_t> offenders;  // least periods that are not powers of two
};

// A non-power-of-two least period certifies that the periodic set of a
// 1-D map cannot be closed.
PowerOfTwoReport power_of_two_check(const OrbitCatalog& catalog);

}  // namespace nonwander
