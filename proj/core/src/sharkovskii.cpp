#include "nonwander/sharkovskii.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonwander {

SharkovskiiKey SharkovskiiKey::of(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("Sharkovskii order is defined for n >= 1");
  SharkovskiiKey k;
  while (n % 2 == 0) {
    n /= 2;
    ++k.exponent;
  }
  k.odd_part = n;
  k.pure_power = n == 1;
  return k;
}

SharkOrder shark_compare(std::int64_t m, std::int64_t n) {
  if (m == n) return SharkOrder::Equals;
  const SharkovskiiKey a = SharkovskiiKey::of(m);
  const SharkovskiiKey b = SharkovskiiKey::of(n);
  // odd multiples before pure powers
  if (a.pure_power != b.pure_power)
    return a.pure_power ? SharkOrder::Succeeds : SharkOrder::Precedes;
  if (a.pure_power) {
    // powers of two in descending exponent, ... < 4 < 2 < 1
    return a.exponent > b.exponent ? SharkOrder::Precedes : SharkOrder::Succeeds;
  }
  if (a.exponent != b.exponent)
    return a.exponent < b.exponent ? SharkOrder::Precedes : SharkOrder::Succeeds;
  return a.odd_part < b.odd_part ? SharkOrder::Precedes : SharkOrder::Succeeds;
}

std::vector<std::int64_t> forced_periods(std::int64_t n, std::int64_t cap) {
  if (n < 1) throw std::invalid_argument("forced_periods requires n >= 1");
  if (cap < n) throw std::invalid_argument("forced_periods requires cap >= n");
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= cap; ++m)
    if (m == n || shark_compare(n, m) == SharkOrder::Precedes) out.push_back(m);
  return out;
}

ForcingReport check_forcing_closure(const OrbitCatalog& catalog, std::int64_t cap) {
  if (catalog.map_dim != 1)
    throw std::invalid_argument("forcing closure applies to 1-D map catalogs");
  if (catalog.max_period < cap)
    throw std::invalid_argument("catalog horizon is below the requested cap");
  ForcingReport rep;
  for (int p : catalog.least_periods_present())
    if (p <= cap) rep.present.push_back(p);
  for (std::int64_t n : rep.present) {
    for (std::int64_t m : forced_periods(n, cap)) {
      if (!std::binary_search(rep.present.begin(), rep.present.end(), m) &&
          std::find(rep.missing.begin(), rep.missing.end(), m) == rep.missing.end())
        rep.missing.push_back(m);
    }
  }
  std::sort(rep.missing.begin(), rep.missing.end());
  rep.pass = rep.missing.empty();
  return rep;
}

PowerOfTwoReport power_of_two_check(const OrbitCatalog& catalog) {
  if (catalog.map_dim != 1)
    throw std::invalid_argument("power-of-two check applies to 1-D map catalogs");
  PowerOfTwoReport rep;
  for (int p : catalog.least_periods_present()) {
    if ((p & (p - 1)) != 0) rep.offenders.push_back(p);
  }
  rep.pass = rep.offenders.empty();
  return rep;
}

}  // namespace nonwander
