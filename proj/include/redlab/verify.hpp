#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "redlab/descriptors.hpp"
#include "redlab/json_io.hpp"
#include "redlab/norms.hpp"
#include "redlab/points.hpp"
#include "redlab/relations.hpp"
#include "redlab/rng.hpp"
#include "redlab/schedule.hpp"

namespace redlab {

inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Seeded input generators. The bounds below are load-bearing for the
// brute-force comparators in the test suite: with prefixes <= 8, constant
// tails <= 4, slope denominators <= 4 (slope gaps >= 1/12) and tail periods
// <= 3, any divergence out-runs every bounded plateau within the comparison
// window 4*(max prefix + lcm of periods + 64).
// ---------------------------------------------------------------------------

namespace gen {

constexpr std::uint64_t kMaxPrefix = 8;
constexpr std::uint64_t kMaxPeriod = 6;
constexpr std::uint64_t kMaxConstant = 4;
constexpr std::uint64_t kMaxSlopeDen = 4;

inline Rational random_slope(Rng& rng) {
  const auto den = rng.uniform_int(1, kMaxSlopeDen);
  return Rational(BigInt(rng.uniform_int(0, den)), BigInt(den));
}

inline Tail random_tail(Rng& rng) {
  const double roll = rng.u01();
  if (roll < 0.4) return ConstantTail{static_cast<std::uint64_t>(rng.uniform_int(0, kMaxConstant))};
  if (roll < 0.7) return affine_tail(random_slope(rng));
  std::vector<Rational> slopes(rng.uniform_int(2, 3));
  for (auto& s : slopes) s = random_slope(rng);
  return SlopeTail{std::move(slopes)};
}

inline std::vector<std::uint64_t> random_prefix(Rng& rng) {
  std::vector<std::uint64_t> prefix(rng.uniform_int(0, kMaxPrefix));
  for (std::size_t i = 0; i < prefix.size(); ++i)
    prefix[i] = static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)));
  return prefix;
}

inline PointX0 random_x0_point(Rng& rng) { return PointX0(random_prefix(rng), random_tail(rng)); }

/// A point with the same tail slopes as `a` and coordinate differences
/// <= max_diff, hence H_0-related to it with witness <= max_diff.
inline PointX0 related_variant(Rng& rng, const PointX0& a, std::uint64_t max_diff) {
  Tail tail_b = a.tail();
  if (const auto* c = std::get_if<ConstantTail>(&a.tail())) {
    const std::int64_t lo = c->c > max_diff ? static_cast<std::int64_t>(c->c - max_diff) : 0;
    tail_b = ConstantTail{
        static_cast<std::uint64_t>(rng.uniform_int(lo, static_cast<std::int64_t>(c->c + max_diff)))};
  } else if (rng.coin(0.3)) {
    // Re-express the same per-residue slopes with a doubled period.
    auto slopes = std::get<SlopeTail>(a.tail()).slopes;
    const std::size_t m = slopes.size();
    std::vector<Rational> doubled(2 * m);
    for (std::size_t j = 0; j < 2 * m; ++j) doubled[j] = slopes[j % m];
    tail_b = SlopeTail{std::move(doubled)};
  }
  std::vector<std::uint64_t> prefix_b(rng.uniform_int(0, kMaxPrefix));
  for (std::size_t i = 0; i < prefix_b.size(); ++i) {
    const std::uint64_t k = i + 1;
    const std::uint64_t base = a.coord(k);
    const std::int64_t lo = base > max_diff ? static_cast<std::int64_t>(base - max_diff) : 0;
    const std::int64_t hi =
        std::min<std::int64_t>(static_cast<std::int64_t>(base + max_diff), static_cast<std::int64_t>(k - 1));
    prefix_b[i] = static_cast<std::uint64_t>(rng.uniform_int(lo, hi));
  }
  return PointX0(std::move(prefix_b), std::move(tail_b));
}

inline std::pair<PointX0, PointX0> related_x0_pair(Rng& rng, std::uint64_t max_diff) {
  PointX0 a = random_x0_point(rng);
  PointX0 b = related_variant(rng, a, max_diff);
  return {std::move(a), std::move(b)};
}

/// A pair whose tails disagree in slope on some residue class.
inline std::pair<PointX0, PointX0> unrelated_x0_pair(Rng& rng) {
  PointX0 a = random_x0_point(rng);
  for (;;) {
    PointX0 b(random_prefix(rng), random_tail(rng));
    if (!h0_decide(a, b).related) return {std::move(a), std::move(b)};
  }
}

inline BitPoint random_bit_point(Rng& rng) {
  std::vector<int> prefix(rng.uniform_int(0, kMaxPrefix));
  for (auto& b : prefix) b = static_cast<int>(rng.uniform_int(0, 1));
  std::vector<int> period(rng.uniform_int(1, kMaxPeriod));
  for (auto& b : period) b = static_cast<int>(rng.uniform_int(0, 1));
  return BitPoint(std::move(prefix), std::move(period));
}

/// Bit pair that is E_0-related: b copies a's sequence from some index t on
/// and is arbitrary before it, with the tail re-phrased at a new phase.
inline std::pair<BitPoint, BitPoint> related_bit_pair(Rng& rng) {
  BitPoint a = random_bit_point(rng);
  const std::uint64_t len_a = a.prefix().size();
  const std::uint64_t t = rng.uniform_int(0, static_cast<std::int64_t>(len_a) + 6);
  std::vector<int> prefix_b;
  for (std::uint64_t k = 0; k < t; ++k)
    prefix_b.push_back(rng.coin() ? a.value(k) : static_cast<int>(rng.uniform_int(0, 1)));
  const std::uint64_t start = std::max(t, len_a);
  for (std::uint64_t k = t; k < start; ++k) prefix_b.push_back(a.value(k));
  const std::uint64_t m = a.period().size();
  std::vector<int> period_b(m);
  for (std::uint64_t j = 0; j < m; ++j) period_b[j] = a.value(start + j);
  if (rng.coin(0.3)) {
    std::vector<int> doubled(2 * m);
    for (std::uint64_t j = 0; j < 2 * m; ++j) doubled[j] = period_b[j % m];
    period_b = std::move(doubled);
  }
  return {std::move(a), BitPoint(std::move(prefix_b), std::move(period_b))};
}

inline RealSeqPoint random_real_seq_point(Rng& rng) {
  auto rat = [&rng] {
    return Rational(BigInt(rng.uniform_int(-6, 6)), BigInt(rng.uniform_int(1, 6)));
  };
  std::vector<Rational> prefix(rng.uniform_int(0, kMaxPrefix));
  for (auto& v : prefix) v = rat();
  std::vector<Rational> period(rng.uniform_int(1, kMaxPeriod));
  for (auto& v : period) v = rat();
  return RealSeqPoint(std::move(prefix), std::move(period));
}

/// Rationals strictly inside (lo, hi): lo + i*(hi-lo)/16 for i in 1..15.
inline Rational random_value_in(Rng& rng, const Rational& lo, const Rational& hi) {
  return lo + (hi - lo) * Rational(BigInt(rng.uniform_int(1, 15)), BigInt(16));
}

inline CycleListPoint random_cycle_point(Rng& rng, const Rational& lo, const Rational& hi) {
  std::vector<Rational> values(rng.uniform_int(1, 5));
  for (auto& v : values) v = random_value_in(rng, lo, hi);
  return CycleListPoint(std::move(values), lo, hi);
}

/// Same value set as `a`, permuted and duplicated.
inline CycleListPoint eplus_equal_variant(Rng& rng, const CycleListPoint& a) {
  std::vector<Rational> values(a.values());
  for (std::size_t i = values.size(); i-- > 1;)
    std::swap(values[i], values[rng.uniform_int(0, static_cast<std::int64_t>(i))]);
  const std::size_t extra = rng.uniform_int(0, 3);
  for (std::size_t i = 0; i < extra; ++i)
    values.push_back(values[rng.uniform_int(0, static_cast<std::int64_t>(values.size()) - 1)]);
  return CycleListPoint(std::move(values), a.lo(), a.hi());
}

inline ParamSchedule random_schedule(Rng& rng, SumFlavor flavor, int n_max) {
  const double base_p = flavor == SumFlavor::lp ? rng.uniform(1.0, 1.7) : 1.0;
  const double margin = rng.uniform(0.25, 0.9);
  return gen_params(flavor, base_p, n_max, margin);
}

}  // namespace gen

// ---------------------------------------------------------------------------
// CSV verification sweeps.
// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  int n_max = 8;
  std::uint64_t oracle_bound = kDefaultOracleBound;
  std::optional<ParamSchedule> schedule;  // overrides seeded schedules when set
};

struct VerifyRow {
  std::string suite;
  std::string case_id;
  std::uint64_t digest = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;
};

inline void write_csv(std::ostream& os, const std::vector<VerifyRow>& rows) {
  os << "suite,case_id,inputs_digest,lhs,rhs,holds,slack\n";
  char digest[32];
  for (const auto& r : rows) {
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(r.digest));
    os << r.suite << ',' << r.case_id << ',' << digest << ',' << fmt17(r.lhs) << ','
       << fmt17(r.rhs) << ',' << (r.holds ? "true" : "false") << ',' << fmt17(r.slack) << '\n';
  }
}

inline bool all_hold(const std::vector<VerifyRow>& rows) {
  for (const auto& r : rows)
    if (!r.holds) return false;
  return true;
}

namespace detail {

inline std::string case_name(const char* suite, const char* kind, int i) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s/%s/%04d", suite, kind, i);
  return buf;
}

}  // namespace detail

/// Exponential sandwich on seeded (p, q, K, c) tuples plus a small
/// oracle-vs-closed-form agreement grid.
inline std::vector<VerifyRow> verify_lemma21(const VerifyConfig& cfg, int cases = 1000) {
  std::vector<VerifyRow> rows;
  for (int i = 0; i < cases; ++i) {
    const std::string id = detail::case_name("lemma21", "sandwich", i);
    Rng rng(derive_seed(cfg.seed, id));
    const double c = rng.uniform(1.0, 4.0);
    const double p = rng.uniform(1.0, c);
    const double q = rng.uniform(1.0, c);
    const auto k = static_cast<std::uint64_t>(rng.uniform_int(1, 1000000));
    const auto b = lemma_2_1_bounds(p, q, k, c, cfg.tolerance);
    const double cn = eq_const_closed_form(Exponent(p), Exponent(q), k);
    VerifyRow row{"lemma21", id, 0, cn, b.upper, b.holds, std::min(cn - b.lower, b.upper - cn)};
    row.digest = fnv1a(fmt17(p) + "," + fmt17(q) + "," + std::to_string(k) + "," + fmt17(c));
    rows.push_back(row);
  }
  const double grid[] = {1.0, 1.2, 1.5, 2.0, 3.0, -1.0};  // -1 encodes infinity
  int i = 0;
  for (double pv : grid)
    for (double qv : grid)
      for (std::uint64_t k = 1; k <= 16; ++k) {
        const Exponent p = pv < 0 ? Exponent::infinity() : Exponent(pv);
        const Exponent q = qv < 0 ? Exponent::infinity() : Exponent(qv);
        const std::string id = detail::case_name("lemma21", "oracle", i++);
        const double closed = eq_const_closed_form(p, q, k);
        const double oracle =
            eq_const_oracle(p, q, k, 256, derive_seed(cfg.seed, id), cfg.oracle_bound);
        VerifyRow row{"lemma21", id, 0, oracle, closed, false, 0.0};
        const double rel = std::abs(oracle - closed) / closed;
        row.holds = rel <= 1e-6 && oracle <= closed * (1.0 + cfg.tolerance);
        row.slack = 1e-6 - rel;
        row.digest = fnv1a(fmt17(pv) + "," + fmt17(qv) + "," + std::to_string(k));
        rows.push_back(row);
      }
  return rows;
}

/// Disjointly supported families in seeded l_p-outer spaces, checked with
/// the canonical estimate constant C = 1.
inline std::vector<VerifyRow> verify_lemma24(const VerifyConfig& cfg, int cases = 1000) {
  std::vector<VerifyRow> rows;
  for (int i = 0; i < cases; ++i) {
    const std::string id = detail::case_name("lemma24", "family", i);
    Rng rng(derive_seed(cfg.seed, id));
    const double p = rng.uniform(1.0, 1.95);
    const int n_blocks = static_cast<int>(rng.uniform_int(2, 8));
    std::vector<BlockSpec> blocks;
    blocks.reserve(n_blocks);
    for (int b = 0; b < n_blocks; ++b)
      blocks.push_back(BlockSpec::exact(Exponent(rng.uniform(p, 2.0)), rng.uniform_int(1, 6)));
    auto space = std::make_shared<const SumSpace>(SumSpace::lp_sum(Exponent(p), blocks));
    const int k = static_cast<int>(rng.uniform_int(1, 32));
    std::vector<BlockVector> family;
    family.reserve(k);
    for (int v = 0; v < k; ++v) family.push_back(BlockVector::zero(space));
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::uint64_t c = 0; c < blocks[b].dim; ++c) {
        const std::int64_t owner = rng.uniform_int(0, k);  // k means unused
        if (owner < k) family[owner].at(b, c) = rng.uniform(-2.0, 2.0);
      }
    const auto check = lemma_2_4_check(family, Exponent(p), 1.0, cfg.tolerance);
    VerifyRow row{"lemma24", id, fnv1a(fmt17(p) + "#" + std::to_string(k)),
                  check.lhs, check.rhs, check.holds, check.rhs - check.lhs};
    rows.push_back(row);
  }
  return rows;
}

/// Forward direction: H_0-related pairs keep the truncated equivalence
/// constant under e^{2 N0}. Divergence: the (Affine(1), zero) pair blows
/// past 10^3 within depth 12 on schedules whose exponents approach 1.
inline std::vector<VerifyRow> verify_cor22(const VerifyConfig& cfg, int fwd_cases = 100,
                                           int div_cases = 25) {
  std::vector<VerifyRow> rows;
  for (int i = 0; i < fwd_cases; ++i) {
    const std::string id = detail::case_name("cor22", "fwd", i);
    Rng rng(derive_seed(cfg.seed, id));
    ParamSchedule sched = cfg.schedule ? *cfg.schedule
                                       : gen::random_schedule(rng, SumFlavor::lp, cfg.n_max);
    auto [a, b] = gen::related_x0_pair(rng, 8);
    const auto rel = h0_decide(a, b);
    const auto da = space_for(a, sched);
    const auto db = space_for(b, sched);
    double worst = 1.0;
    for (int n = 1; n <= sched.n_max; ++n) worst = std::max(worst, truncated_eq_const(da, db, n));
    const double bound = std::exp(2.0 * static_cast<double>(rel.witness));
    VerifyRow row{"cor22", id, fnv1a(to_json(sched).dump() + to_json(a).dump() + to_json(b).dump()),
                  worst, bound, rel.related && worst <= bound * (1.0 + cfg.tolerance),
                  bound - worst};
    rows.push_back(row);
  }
  const PointX0 steep({}, affine_tail(Rational(1)));
  const PointX0 flat({}, zero_tail());
  for (int i = 0; i < div_cases; ++i) {
    const std::string id = detail::case_name("cor22", "div", i);
    Rng rng(derive_seed(cfg.seed, id));
    // Depth 12 and low margins are what make the 10^3 threshold reachable.
    const ParamSchedule sched = gen_params(SumFlavor::c0, 1.0, 12, rng.uniform(0.2, 0.5));
    const auto da = space_for(steep, sched);
    const auto db = space_for(flat, sched);
    bool increasing = true;
    double prev = truncated_eq_const(da, db, 2);
    double peak = prev;
    for (int n = 3; n <= 12; ++n) {
      const double cur = truncated_eq_const(da, db, n);
      increasing = increasing && cur > prev;
      prev = cur;
      peak = std::max(peak, cur);
    }
    VerifyRow row{"cor22", id, fnv1a(to_json(sched).dump()), peak, 1000.0,
                  increasing && peak > 1000.0, peak - 1000.0};
    rows.push_back(row);
  }
  return rows;
}

/// H_0-related pairs satisfy the per-block gap bound with C = witness.
inline std::vector<VerifyRow> verify_prop25(const VerifyConfig& cfg, int cases = 100) {
  std::vector<VerifyRow> rows;
  for (int i = 0; i < cases; ++i) {
    const std::string id = detail::case_name("prop25", "related", i);
    Rng rng(derive_seed(cfg.seed, id));
    ParamSchedule sched = cfg.schedule ? *cfg.schedule
                                       : gen::random_schedule(rng, SumFlavor::lp, cfg.n_max);
    auto [a, b] = gen::related_x0_pair(rng, 8);
    const auto rel = h0_decide(a, b);
    const double c = rel.witness > 0 ? static_cast<double>(rel.witness) : 1.0;
    const auto gap_rows = prop_2_5_conclusion_check(space_for(a, sched), space_for(b, sched), c);
    bool holds = true;
    double slack = std::numeric_limits<double>::infinity();
    double worst_gap = 0.0;
    for (const auto& gr : gap_rows) {
      holds = holds && gr.holds;
      slack = std::min(slack, gr.bound - gr.gap);
      worst_gap = std::max(worst_gap, gr.gap);
    }
    rows.push_back(VerifyRow{"prop25", id,
                             fnv1a(to_json(sched).dump() + to_json(a).dump() + to_json(b).dump()),
                             worst_gap, c / sched.log_k(sched.n_max), holds, slack});
  }
  return rows;
}

/// =^+ agrees with part-set equality of the l_p^inf-sum descriptors, and
/// summand detection is true exactly on parts plus the base.
inline std::vector<VerifyRow> verify_eplus(const VerifyConfig& cfg, int cases = 1000) {
  std::vector<VerifyRow> rows;
  const Rational base(1);
  const auto [lo, hi] = interval_for_base(base);
  for (int i = 0; i < cases; ++i) {
    const std::string id = detail::case_name("eplus", "pair", i);
    Rng rng(derive_seed(cfg.seed, id));
    const CycleListPoint a = gen::random_cycle_point(rng, lo, hi);
    const CycleListPoint b = rng.coin() ? gen::eplus_equal_variant(rng, a)
                                        : gen::random_cycle_point(rng, lo, hi);
    const bool rel = eplus_decide(a, b);
    const auto da = x_alpha(a, base);
    const auto db = x_alpha(b, base);
    bool detect_ok = summand_detect(base, da);
    for (const auto& q : da.parts) detect_ok = detect_ok && summand_detect(q, da);
    detect_ok = detect_ok && !summand_detect(Rational(3), da) &&
                !summand_detect(gen::random_value_in(rng, Rational(2), Rational(3)), da);
    const bool consistent = rel == (da.parts == db.parts) && detect_ok;
    rows.push_back(VerifyRow{"eplus", id, fnv1a(to_json(a).dump() + to_json(b).dump()),
                             rel ? 1.0 : 0.0, da.parts == db.parts ? 1.0 : 0.0, consistent,
                             consistent ? 0.0 : -1.0});
  }
  return rows;
}

/// E_0 coincides with H_0 through the embedding j.
inline std::vector<VerifyRow> verify_jembed(const VerifyConfig& cfg, int cases = 1000) {
  std::vector<VerifyRow> rows;
  for (int i = 0; i < cases; ++i) {
    const std::string id = detail::case_name("j-embed", "pair", i);
    Rng rng(derive_seed(cfg.seed, id));
    auto [a, b] = rng.coin() ? gen::related_bit_pair(rng)
                             : std::pair{gen::random_bit_point(rng), gen::random_bit_point(rng)};
    const bool e0 = e0_decide(a, b);
    const bool h0 = h0_decide(j_embed(a), j_embed(b)).related;
    rows.push_back(VerifyRow{"j-embed", id, fnv1a(to_json(a).dump() + to_json(b).dump()),
                             e0 ? 1.0 : 0.0, h0 ? 1.0 : 0.0, e0 == h0, e0 == h0 ? 0.0 : -1.0});
  }
  return rows;
}

inline std::vector<std::string> suite_names() {
  return {"lemma21", "lemma24", "cor22", "prop25", "eplus", "j-embed"};
}

inline std::vector<VerifyRow> run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (cfg.schedule) {
    const auto checks = validate_schedule(*cfg.schedule);
    if (const auto* bad = first_violated(checks))
      fail(errc::schedule_invalid,
           "clause '" + bad->id + "' fails with slack " + std::to_string(bad->slack));
  }
  if (name == "lemma21") return verify_lemma21(cfg);
  if (name == "lemma24") return verify_lemma24(cfg);
  if (name == "cor22") return verify_cor22(cfg);
  if (name == "prop25") return verify_prop25(cfg);
  if (name == "eplus") return verify_eplus(cfg);
  if (name == "j-embed") return verify_jembed(cfg);
  if (name == "all") {
    std::vector<VerifyRow> rows;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, cfg);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
  }
  fail(errc::invalid_input, "unknown suite '" + name + "'");
}

}  // namespace redlab
