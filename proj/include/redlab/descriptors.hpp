#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redlab/errors.hpp"
#include "redlab/norms.hpp"
#include "redlab/points.hpp"
#include "redlab/rational.hpp"
#include "redlab/schedule.hpp"
#include "redlab/spaces.hpp"

namespace redlab {

// ---------------------------------------------------------------------------
// The point-to-space reduction: block n gets exponent p_n + a(n)/log K_n.
// ---------------------------------------------------------------------------

struct SpaceDescriptor {
  ParamSchedule schedule;
  PointX0 point;
  SumSpace space;

  double exponent(int n) const { return space.blocks().at(n - 1).exponent.value(); }

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    return a.schedule == b.schedule && a.space == b.space;
  }
};

inline SpaceDescriptor space_for(const PointX0& point, const ParamSchedule& s) {
  const auto checks = validate_schedule(s);
  if (const auto* bad = first_violated(checks))
    fail(errc::schedule_invalid, "clause '" + bad->id + "' fails with slack " +
                                     std::to_string(bad->slack));
  std::vector<BlockSpec> blocks;
  blocks.reserve(s.blocks.size());
  for (int n = 1; n <= s.n_max; ++n) {
    const double e_n = s.p(n) + static_cast<double>(point.coord(n)) / s.log_k(n);
    const auto& sb = s.blocks[n - 1];
    blocks.push_back(sb.dim ? BlockSpec::exact(Exponent(e_n), *sb.dim)
                            : BlockSpec::log_only(Exponent(e_n), sb.log_dim));
  }
  SumSpace space = s.flavor == SumFlavor::lp
                       ? SumSpace::lp_sum(Exponent(s.base_p), std::move(blocks))
                       : SumSpace::c0_sum(std::move(blocks));
  return SpaceDescriptor{s, point, std::move(space)};
}

namespace detail {

inline void check_shared_schedule(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  require(a.schedule == b.schedule, errc::schedule_mismatch,
          "descriptors do not share a schedule");
}

}  // namespace detail

/// Exact equivalence constant of the truncated canonical bases. Blocks align
/// and the outer norm is identical, so the block-diagonal constant is the max
/// of the blockwise constants K_n^{|1/e_n - 1/e'_n|}.
inline double truncated_eq_const(const SpaceDescriptor& a, const SpaceDescriptor& b, int n) {
  detail::check_shared_schedule(a, b);
  require(n >= 1 && n <= a.schedule.n_max, errc::invalid_input,
          "truncation depth out of range");
  double best = 1.0;
  for (int i = 1; i <= n; ++i)
    best = std::max(best, eq_const_from_log_dim(Exponent(a.exponent(i)),
                                                Exponent(b.exponent(i)),
                                                a.schedule.log_k(i)));
  return best;
}

struct GapRow {
  int n = 0;
  double gap = 0.0;    // e_n(a) - e_n(b)
  double bound = 0.0;  // C / log K_n
  bool holds = true;
};

/// Per-block check of the conclusion p_n - q_n <= C/log K_n.
inline std::vector<GapRow> prop_2_5_conclusion_check(const SpaceDescriptor& a,
                                                     const SpaceDescriptor& b, double c) {
  detail::check_shared_schedule(a, b);
  require(c > 0.0, errc::invalid_input, "C must be positive");
  std::vector<GapRow> rows;
  rows.reserve(a.schedule.n_max);
  for (int n = 1; n <= a.schedule.n_max; ++n) {
    GapRow row;
    row.n = n;
    row.gap = a.exponent(n) - b.exponent(n);
    row.bound = c / a.schedule.log_k(n);
    row.holds = row.gap <= row.bound * (1.0 + 1e-9);
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// l_p^inf-sums: each summand l_q repeated infinitely often, so only the set
// of exponents matters.
// ---------------------------------------------------------------------------

struct LpSumDescriptor {
  Rational base_p;
  std::set<Rational> parts;

  friend bool operator==(const LpSumDescriptor& a, const LpSumDescriptor& b) {
    return a.base_p == b.base_p && a.parts == b.parts;
  }
};

inline LpSumDescriptor x_alpha(const CycleListPoint& point, const Rational& base_p) {
  for (const auto& v : point.values())
    require(v > base_p && v < Rational(2), errc::value_outside_p,
            "value " + redlab::to_string(v) + " is not strictly inside ]" +
                redlab::to_string(base_p) + ", 2[");
  return LpSumDescriptor{base_p, point.value_set()};
}

/// Computable content of the embedding criterion: l_q sits inside the sum
/// iff q is the outer exponent or one of the parts.
inline bool summand_detect(const Rational& q, const LpSumDescriptor& d) {
  return q == d.base_p || d.parts.count(q) > 0;
}

// ---------------------------------------------------------------------------
// The pairing h(a, b) = f(a) (+) g(b): an l_{(p+1)/2}-flavored schedule space
// on the left, an l_p^inf-sum on the right.
// ---------------------------------------------------------------------------

struct DirectSumDescriptor {
  SpaceDescriptor left;
  LpSumDescriptor right;
  Rational left_base;  // (p+1)/2, kept exact

  friend bool operator==(const DirectSumDescriptor& a, const DirectSumDescriptor& b) {
    return a.left == b.left && a.right == b.right && a.left_base == b.left_base;
  }
};

inline DirectSumDescriptor h_direct_sum(const PointX0& a, const CycleListPoint& b,
                                        const Rational& p, int n_max, double margin = 0.5) {
  require(p >= 1 && p < 2, errc::invalid_input, "base exponent must lie in [1, 2)");
  const auto [lo, hi] = interval_for_base(p);
  require(b.lo() == lo && b.hi() == hi, errc::domain_mismatch,
          "point interval does not match ](p+1)/2, 2[ for this p");
  const Rational left_base = (p + 1) / 2;
  const ParamSchedule sched =
      gen_params(SumFlavor::lp, to_double(left_base), n_max, margin);
  return DirectSumDescriptor{space_for(a, sched), x_alpha(b, p), left_base};
}

/// True when the left base exponent appears nowhere on the right, which is
/// the embedding criterion's notion of total incomparability.
inline bool totally_incomparable(const DirectSumDescriptor& d) {
  return !summand_detect(d.left_base, d.right);
}

}  // namespace redlab
