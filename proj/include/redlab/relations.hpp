#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "redlab/errors.hpp"
#include "redlab/points.hpp"
#include "redlab/rational.hpp"

namespace redlab {

// ---------------------------------------------------------------------------
// H_0: bounded coordinatewise difference on X_0.
// ---------------------------------------------------------------------------

struct H0Result {
  bool related = false;
  /// Exact sup_k |a(k) - b(k)| when related.
  std::uint64_t witness = 0;
  /// When unrelated: a residue class (mod `modulus`) whose slopes differ.
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  Rational slope_gap;
};

namespace detail {

inline std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace detail

/// Decides H_0 exactly. Two tails keep the difference bounded iff their
/// asymptotic slopes agree on every residue class; the witness is then
/// computed by case analysis over the stabilization range.
inline H0Result h0_decide(const PointX0& a, const PointX0& b) {
  const std::uint64_t m = std::lcm(a.tail_period(), b.tail_period());
  for (std::uint64_t j = 0; j < m; ++j) {
    const Rational sa = a.slope_at(j);
    const Rational sb = b.slope_at(j);
    if (sa != sb) {
      H0Result out;
      out.related = false;
      out.modulus = m;
      out.residue = j;
      out.slope_gap = sa > sb ? sa - sb : sb - sa;
      return out;
    }
  }

  // Related. Beyond both prefixes the difference per residue class is
  // eventually constant: zero for matching slope tails, |c_a - c_b| for two
  // constants, and c for a constant against an all-zero-slope tail.
  H0Result out;
  out.related = true;
  const std::uint64_t first_tail_k =
      std::max<std::uint64_t>(a.prefix().size(), b.prefix().size()) + 1;
  for (std::uint64_t k = 1; k < first_tail_k; ++k)
    out.witness = std::max(out.witness, detail::abs_diff(a.coord(k), b.coord(k)));

  const auto* ca = std::get_if<ConstantTail>(&a.tail());
  const auto* cb = std::get_if<ConstantTail>(&b.tail());
  std::uint64_t tail_sup = 0;
  if (ca && cb) {
    tail_sup = detail::abs_diff(ca->c, cb->c);
  } else if (ca || cb) {
    // Constant against slopes; relatedness forces all those slopes to be 0.
    tail_sup = ca ? ca->c : cb->c;
  }
  out.witness = std::max(out.witness, tail_sup);
  return out;
}

/// For an unrelated pair, produces a coordinate k with |a(k) - b(k)| > bound.
inline std::uint64_t h0_divergence_witness(const PointX0& a, const PointX0& b,
                                           std::uint64_t bound) {
  const H0Result res = h0_decide(a, b);
  require(!res.related, errc::invalid_input, "points are H_0-related; no divergence exists");
  std::uint64_t k = std::max<std::uint64_t>(
      {a.prefix().size(), b.prefix().size(), res.modulus, 1});
  k += res.modulus - (k % res.modulus) + res.residue;  // align to the class, past prefixes
  for (;; k += res.modulus)
    if (detail::abs_diff(a.coord(k), b.coord(k)) > bound) return k;
}

// ---------------------------------------------------------------------------
// E_0 and E_1: eventual equality of sequences.
// ---------------------------------------------------------------------------

/// Exact decision for eventually periodic sequences: beyond both prefixes
/// the pair is jointly periodic, so eventual agreement is agreement on one
/// full joint period; the window [L0 + m, L0 + 2m) is checked.
template <class T>
bool eventually_equal(const PeriodicPoint<T>& a, const PeriodicPoint<T>& b) {
  const std::uint64_t l0 = std::max(a.prefix().size(), b.prefix().size());
  const std::uint64_t m = std::lcm(a.period().size(), b.period().size());
  for (std::uint64_t k = l0 + m; k < l0 + 2 * m; ++k)
    if (!(a.value(k) == b.value(k))) return false;
  return true;
}

inline bool e0_decide(const BitPoint& a, const BitPoint& b) { return eventually_equal(a, b); }

inline bool e1_decide(const RealSeqPoint& a, const RealSeqPoint& b) {
  return eventually_equal(a, b);
}

// ---------------------------------------------------------------------------
// =^+ over the cycled points of P^w: with E equality, =^+ is equality of
// value sets (multiplicity is irrelevant, every value recurs forever).
// ---------------------------------------------------------------------------

inline bool eplus_decide(const CycleListPoint& a, const CycleListPoint& b) {
  require(a.same_interval(b), errc::domain_mismatch,
          "points are configured over different intervals");
  return a.value_set() == b.value_set();
}

// ---------------------------------------------------------------------------
// Product relation: (x,x') R (x) R' (y,y') <=> x R y and x' R' y'.
// ---------------------------------------------------------------------------

template <class Rel1, class Rel2, class X, class Xp>
bool product_decide(Rel1&& r1, Rel2&& r2, const std::pair<X, Xp>& p1,
                    const std::pair<X, Xp>& p2) {
  return r1(p1.first, p2.first) && r2(p1.second, p2.second);
}

// ---------------------------------------------------------------------------
// The embedding j(a) = (0, a(1), 2 a(2), 3 a(3), ...), sending E_0 on bit
// sequences to H_0 on X_0. A periodic bit tail lands on a slope tail whose
// per-residue slopes are the bits themselves.
// ---------------------------------------------------------------------------

inline PointX0 j_embed(const BitPoint& a) {
  const std::uint64_t p_len = a.prefix().size();
  const std::uint64_t m = a.period().size();
  std::vector<std::uint64_t> prefix;
  prefix.reserve(p_len + 1);
  prefix.push_back(0);  // coordinate 1
  for (std::uint64_t k = 2; k <= p_len + 1; ++k)
    prefix.push_back((k - 1) * static_cast<std::uint64_t>(a.value(k - 2)));
  std::vector<Rational> slopes(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    // For tail coordinates k with k mod m == j, the bit index k-2 sits at
    // period position (k - 2 - p_len) mod m.
    const std::uint64_t pos = (j + 2 * m - ((2 + p_len) % m)) % m;
    slopes[j] = Rational(a.period()[pos]);
  }
  return PointX0(std::move(prefix), SlopeTail{std::move(slopes)});
}

}  // namespace redlab
