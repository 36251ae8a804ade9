// Test-only brute-force comparators, independent of the deciders they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "redlab/points.hpp"
#include "redlab/relations.hpp"

namespace redlab::oracle {

inline std::uint64_t x0_window(const PointX0& a, const PointX0& b) {
  const std::uint64_t prefix = std::max(a.prefix().size(), b.prefix().size());
  return 4 * (prefix + std::lcm(a.tail_period(), b.tail_period()) + 64);
}

struct BruteH0 {
  bool related = false;
  std::uint64_t witness = 0;
};

/// Expands both points to 4*(max prefix + lcm of periods + 64) coordinates.
/// A pair is related iff the difference stops growing: the maximum over the
/// second half does not exceed the maximum over the first half. Sound for
/// the generator bounds in redlab::gen (plateaus stabilize inside the first
/// half, any slope gap grows past every plateau by the window end).
inline BruteH0 brute_h0(const PointX0& a, const PointX0& b) {
  const std::uint64_t window = x0_window(a, b);
  std::uint64_t first_half = 0, second_half = 0;
  for (std::uint64_t k = 1; k <= window; ++k) {
    const std::uint64_t va = a.coord(k);
    const std::uint64_t vb = b.coord(k);
    const std::uint64_t d = va > vb ? va - vb : vb - va;
    (k <= window / 2 ? first_half : second_half) = std::max(k <= window / 2 ? first_half : second_half, d);
  }
  BruteH0 out;
  out.related = second_half <= first_half;
  out.witness = std::max(first_half, second_half);
  return out;
}

/// Eventual equality by direct expansion: beyond max prefix the joint pair
/// is periodic, so agreement on the second half decides.
template <class T>
bool brute_eventually_equal(const PeriodicPoint<T>& a, const PeriodicPoint<T>& b) {
  const std::uint64_t prefix = std::max(a.prefix().size(), b.prefix().size());
  const std::uint64_t window =
      4 * (prefix + std::lcm(a.period().size(), b.period().size()) + 64);
  for (std::uint64_t k = window / 2; k < window; ++k)
    if (!(a.value(k) == b.value(k))) return false;
  return true;
}

}  // namespace redlab::oracle
