// Acceptance suite: one line per criterion, every tolerance pinned in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "redlab/descriptors.hpp"
#include "redlab/hierarchy.hpp"
#include "redlab/norms.hpp"
#include "redlab/relations.hpp"
#include "redlab/rng.hpp"
#include "redlab/schedule.hpp"
#include "redlab/verify.hpp"

using namespace redlab;

namespace {

constexpr std::uint64_t kSeed = 20260810;

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check(bool cond, std::string& detail, const std::string& msg) {
  if (!cond && detail.empty()) detail = msg;
  return cond;
}

// 1. oracle vs closed form on the full grid, 1e4 samples per pair
bool criterion_eq_const(std::string& detail) {
  const double grid[] = {1.0, 1.2, 1.5, 2.0, 3.0, -1.0};
  bool ok = true;
  for (double pv : grid)
    for (double qv : grid)
      for (std::uint64_t k = 1; k <= 16; ++k) {
        const Exponent p = pv < 0 ? Exponent::infinity() : Exponent(pv);
        const Exponent q = qv < 0 ? Exponent::infinity() : Exponent(qv);
        const double closed = eq_const_closed_form(p, q, k);
        const double oracle = eq_const_oracle(p, q, k, 10000, splitmix64(kSeed ^ (k * 977)));
        ok &= check(std::abs(oracle - closed) / closed <= 1e-6, detail,
                    "oracle disagrees at p=" + std::to_string(pv) + " q=" + std::to_string(qv) +
                        " K=" + std::to_string(k));
        ok &= check(oracle <= closed * (1.0 + 1e-9), detail,
                    "a sample exceeded the closed form");
      }
  return ok;
}

// 2. exponential sandwich on 1e3 seeded tuples
bool criterion_sandwich(std::string& detail) {
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed, "sandwich/" + std::to_string(i)));
    const double cap = rng.uniform(1.0, 4.0);
    const double p = rng.uniform(1.0, cap);
    const double q = rng.uniform(1.0, cap);
    const auto k = static_cast<std::uint64_t>(rng.uniform_int(1, 1000000));
    ok &= check(lemma_2_1_bounds(p, q, k, cap).holds, detail,
                "sandwich fails at case " + std::to_string(i));
  }
  return ok;
}

// 3. forward direction at truncation scale, depth 12
bool criterion_cor22_forward(std::string& detail) {
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    Rng rng(derive_seed(kSeed, "cor22fwd/" + std::to_string(i)));
    const auto sched = gen::random_schedule(rng, SumFlavor::lp, 12);
    const auto [a, b] = gen::related_x0_pair(rng, 8);
    const auto rel = h0_decide(a, b);
    ok &= check(rel.related && rel.witness <= 8, detail, "generator produced a bad pair");
    const auto da = space_for(a, sched);
    const auto db = space_for(b, sched);
    const double bound = std::exp(2.0 * static_cast<double>(rel.witness)) * (1.0 + 1e-9);
    for (int n = 1; n <= 12; ++n)
      ok &= check(truncated_eq_const(da, db, n) <= bound, detail,
                  "constant exceeds e^{2N0} at case " + std::to_string(i));
  }
  return ok;
}

// 4. converse surrogate: the steep/flat pair blows past 1e3 within depth 12
bool criterion_cor22_converse(std::string& detail) {
  const PointX0 steep({}, affine_tail(Rational(1)));
  const PointX0 flat({}, zero_tail());
  bool ok = true;
  for (int i = 0; i < 25; ++i) {
    Rng rng(derive_seed(kSeed, "cor22div/" + std::to_string(i)));
    const auto sched = gen_params(SumFlavor::c0, 1.0, 12, rng.uniform(0.2, 0.5));
    const auto da = space_for(steep, sched);
    const auto db = space_for(flat, sched);
    bool exceeded = false, increasing = true;
    double prev = truncated_eq_const(da, db, 2);
    exceeded = prev > 1000.0;
    for (int n = 3; n <= 12; ++n) {
      const double cur = truncated_eq_const(da, db, n);
      increasing = increasing && cur > prev;
      exceeded = exceeded || cur > 1000.0;
      prev = cur;
    }
    ok &= check(exceeded, detail, "constant never exceeded 1e3 at case " + std::to_string(i));
    ok &= check(increasing, detail, "constant not strictly increasing at case " + std::to_string(i));
  }
  return ok;
}

// 5. disjoint-support inequality with C = 1, plus the tightness case
bool criterion_lemma24(std::string& detail) {
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed, "lemma24/" + std::to_string(i)));
    const double p = rng.uniform(1.0, 1.95);
    const int n_blocks = static_cast<int>(rng.uniform_int(2, 8));
    std::vector<BlockSpec> blocks;
    for (int b = 0; b < n_blocks; ++b)
      blocks.push_back(BlockSpec::exact(Exponent(rng.uniform(p, 2.0)), rng.uniform_int(1, 6)));
    auto space = std::make_shared<const SumSpace>(SumSpace::lp_sum(Exponent(p), blocks));
    const int k = static_cast<int>(rng.uniform_int(1, 32));
    std::vector<BlockVector> family(k, BlockVector::zero(space));
    for (int b = 0; b < n_blocks; ++b)
      for (std::uint64_t c = 0; c < blocks[b].dim; ++c) {
        const auto owner = rng.uniform_int(0, k);
        if (owner < k) family[owner].at(b, c) = rng.uniform(-2.0, 2.0);
      }
    ok &= check(lemma_2_4_check(family, Exponent(p), 1.0, 1e-9).holds, detail,
                "inequality fails at case " + std::to_string(i));
  }
  for (int i = 0; i < 32; ++i) {
    Rng rng(derive_seed(kSeed, "lemma24tight/" + std::to_string(i)));
    const double p = rng.uniform(1.0, 1.9);
    const double r = rng.uniform(p, 2.0);
    const auto k = static_cast<std::uint64_t>(rng.uniform_int(2, 24));
    auto space = std::make_shared<const SumSpace>(
        SumSpace::lp_sum(Exponent(p), {BlockSpec::exact(Exponent(r), k)}));
    std::vector<BlockVector> units;
    for (std::uint64_t u = 0; u < k; ++u) {
      BlockVector v = BlockVector::zero(space);
      v.at(0, u) = 1.0;
      units.push_back(v);
    }
    const auto res = lemma_2_4_check(units, Exponent(p), 1.0, 1e-9);
    ok &= check(res.holds && std::abs(res.lhs - res.rhs) <= 1e-9 * res.rhs, detail,
                "tightness case is not an equality");
  }
  return ok;
}

// 6. schedule constraint systems with strictly positive slack
bool criterion_schedules(std::string& detail) {
  bool ok = true;
  for (int i = 0; i < 50; ++i) {
    Rng rng(derive_seed(kSeed, "sched/" + std::to_string(i)));
    const SumFlavor flavor = i % 2 == 0 ? SumFlavor::lp : SumFlavor::c0;
    const int n_max = static_cast<int>(rng.uniform_int(1, 12));
    const auto s = gen::random_schedule(rng, flavor, n_max);
    for (const auto& c : validate_schedule(s)) {
      ok &= check(c.holds, detail, "clause " + c.id + " fails at config " + std::to_string(i));
      if (c.slack != std::numeric_limits<double>::infinity())
        ok &= check(c.slack > 0.0, detail, "clause " + c.id + " has zero slack");
    }
  }
  return ok;
}

// 7. deciders vs brute-force expansion, plus equivalence axioms
bool criterion_deciders(std::string& detail) {
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed, "decide/" + std::to_string(i)));
    const auto [a, b] =
        rng.coin() ? gen::related_x0_pair(rng, 8) : gen::unrelated_x0_pair(rng);
    const auto fast = h0_decide(a, b);
    const auto brute = oracle::brute_h0(a, b);
    ok &= check(fast.related == brute.related, detail, "h0 disagrees with brute force");
    if (fast.related && brute.related)
      ok &= check(fast.witness == brute.witness, detail, "h0 witness disagrees");

    const auto [ba, bb] = rng.coin()
                              ? gen::related_bit_pair(rng)
                              : std::pair{gen::random_bit_point(rng), gen::random_bit_point(rng)};
    ok &= check(e0_decide(ba, bb) == oracle::brute_eventually_equal(ba, bb), detail,
                "e0 disagrees with brute force");

    const RealSeqPoint ra = gen::random_real_seq_point(rng);
    const RealSeqPoint rb =
        rng.coin() ? RealSeqPoint(gen::random_real_seq_point(rng).prefix(), ra.period())
                   : gen::random_real_seq_point(rng);
    ok &= check(e1_decide(ra, rb) == oracle::brute_eventually_equal(ra, rb), detail,
                "e1 disagrees with brute force");
  }
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed, "axioms/" + std::to_string(i)));
    const PointX0 a = gen::random_x0_point(rng);
    const PointX0 b = gen::related_variant(rng, a, 6);
    const PointX0 c = gen::related_variant(rng, b, 6);
    const auto ab = h0_decide(a, b);
    const auto bc = h0_decide(b, c);
    const auto ac = h0_decide(a, c);
    ok &= check(h0_decide(a, a).related && h0_decide(a, a).witness == 0, detail, "h0 not reflexive");
    ok &= check(ab.related && h0_decide(b, a).related, detail, "h0 not symmetric");
    ok &= check(h0_decide(b, a).witness == ab.witness, detail, "h0 witness not symmetric");
    ok &= check(ac.related && ac.witness <= ab.witness + bc.witness, detail,
                "h0 transitivity witness bound fails");

    // same axioms for eventual equality, on chains and on arbitrary triples
    const BitPoint ba = gen::random_bit_point(rng);
    const auto [ignored, bb] = gen::related_bit_pair(rng);
    const BitPoint bc2 = rng.coin() ? gen::related_bit_pair(rng).second : gen::random_bit_point(rng);
    ok &= check(e0_decide(ba, ba), detail, "e0 not reflexive");
    ok &= check(e0_decide(ba, bb) == e0_decide(bb, ba), detail, "e0 not symmetric");
    if (e0_decide(ba, bb) && e0_decide(bb, bc2))
      ok &= check(e0_decide(ba, bc2), detail, "e0 not transitive");

    const RealSeqPoint ra = gen::random_real_seq_point(rng);
    const RealSeqPoint rb(gen::random_real_seq_point(rng).prefix(), ra.period());
    const RealSeqPoint rc(gen::random_real_seq_point(rng).prefix(), ra.period());
    ok &= check(e1_decide(ra, ra), detail, "e1 not reflexive");
    ok &= check(e1_decide(ra, rb) == e1_decide(rb, ra), detail, "e1 not symmetric");
    if (e1_decide(ra, rb) && e1_decide(rb, rc))
      ok &= check(e1_decide(ra, rc), detail, "e1 not transitive");
  }
  return ok;
}

// 8. E0 coincides with H0 through j
bool criterion_jembed(std::string& detail) {
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed, "jembed/" + std::to_string(i)));
    const auto [a, b] = rng.coin()
                            ? gen::related_bit_pair(rng)
                            : std::pair{gen::random_bit_point(rng), gen::random_bit_point(rng)};
    ok &= check(e0_decide(a, b) == h0_decide(j_embed(a), j_embed(b)).related, detail,
                "j transport fails at case " + std::to_string(i));
  }
  return ok;
}

// 9. =^+ surrogate: part sets and summand detection
bool criterion_xalpha(std::string& detail) {
  const Rational base(1);
  const auto [lo, hi] = interval_for_base(base);
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(kSeed, "xalpha/" + std::to_string(i)));
    const auto a = gen::random_cycle_point(rng, lo, hi);
    const auto b =
        rng.coin() ? gen::eplus_equal_variant(rng, a) : gen::random_cycle_point(rng, lo, hi);
    const auto da = x_alpha(a, base);
    const auto db = x_alpha(b, base);
    ok &= check(eplus_decide(a, b) == (da.parts == db.parts), detail,
                "=^+ disagrees with part sets at case " + std::to_string(i));
    ok &= check(summand_detect(base, da), detail, "base not detected");
    for (const auto& q : da.parts)
      ok &= check(summand_detect(q, da), detail, "part not detected");
    const Rational off = gen::random_value_in(rng, lo, hi);
    ok &= check(summand_detect(off, da) == (off == base || da.parts.count(off) > 0), detail,
                "detection wrong off the parts");
    ok &= check(!summand_detect(Rational(7), da), detail, "detection wrong above 2");
  }
  return ok;
}

// 10. product verdict assembled from the pairing's components
bool criterion_product(std::string& detail) {
  const Rational p(3, 2);
  const auto [lo, hi] = interval_for_base(p);
  bool ok = true;
  for (int i = 0; i < 200; ++i) {
    Rng rng(derive_seed(kSeed, "product/" + std::to_string(i)));
    auto cycle_above_p = [&] {
      std::vector<Rational> values(rng.uniform_int(1, 4));
      for (auto& v : values) v = gen::random_value_in(rng, p, hi);
      return CycleListPoint(std::move(values), lo, hi);
    };
    const PointX0 a = gen::random_x0_point(rng);
    const PointX0 a2 = rng.coin() ? gen::related_variant(rng, a, 6) : gen::random_x0_point(rng);
    const CycleListPoint b = cycle_above_p();
    const CycleListPoint b2 = rng.coin() ? gen::eplus_equal_variant(rng, b) : cycle_above_p();

    const bool product = product_decide(
        [](const PointX0& x, const PointX0& y) { return h0_decide(x, y).related; },
        [](const CycleListPoint& x, const CycleListPoint& y) { return eplus_decide(x, y); },
        std::pair{a, b}, std::pair{a2, b2});

    const auto da = h_direct_sum(a, b, p, 8);
    const auto db = h_direct_sum(a2, b2, p, 8);
    const auto rel = h0_decide(a, a2);
    const bool left_ok = rel.related &&
                         truncated_eq_const(da.left, db.left, 8) <=
                             std::exp(2.0 * static_cast<double>(rel.witness)) * (1.0 + 1e-9);
    const bool right_ok = da.right.parts == db.right.parts;
    ok &= check(product == (left_ok && right_ok), detail,
                "component verdict mismatch at case " + std::to_string(i));
    ok &= check(totally_incomparable(da), detail, "left base leaked into the right parts");
  }
  return ok;
}

// 11. seeded registry: exact edges, acyclic strict part, deterministic DOT
bool criterion_hierarchy(std::string& detail) {
  const auto g = RelationGraph::seeded();
  using E = std::tuple<std::string, std::string, bool>;
  const std::set<E> expected{
      {"=1", "=2", true},     {"=2", "=3", true},     {"=3", "=4", true},
      {"=4", "=ω", true},     {"=ω", "=2^ω", true},   {"=2^ω", "E0", true},
      {"E0", "EF2", true},    {"EF2", "ESinf", true}, {"ESinf", "EG0", true},
      {"E1", "EKsigma", true},
      {"EF2", "=+", true},    {"=+", "ESinf", true},
      {"H0", "EKsigma", false}, {"EKsigma", "H0", false},
      {"EG0", "ESigma11", true}, {"EKsigma", "ESigma11", true},
  };
  std::set<E> actual;
  for (const auto& e : g.edges()) actual.insert({e.from, e.to, e.strict});
  bool ok = check(actual == expected, detail, "edge set differs from the hand-coded list");
  ok &= check(g.strict_part_acyclic(), detail, "strict part has a cycle");
  const std::string dot = g.export_dot();
  ok &= check(dot == RelationGraph::seeded().export_dot(), detail, "DOT not deterministic");
  ok &= check(dot.find("\"E1\" -> \"EKsigma\"") != std::string::npos, detail,
              "chain (4) missing from DOT");
  ok &= check(g.reachable("H0", "EKsigma") && g.reachable("EKsigma", "H0"), detail,
              "bireducibility pair not mutually reachable");
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "equivalence-constant oracle agreement", 10.0, criterion_eq_const},
      {2, "exponential sandwich", 1.0, criterion_sandwich},
      {3, "truncated constants bounded for related pairs", 5.0, criterion_cor22_forward},
      {4, "truncated constants diverge for the steep pair", 1.0, criterion_cor22_converse},
      {5, "disjoint-support inequality with C=1", 5.0, criterion_lemma24},
      {6, "schedule constraint systems", 1.0, criterion_schedules},
      {7, "relation deciders vs brute force", 5.0, criterion_deciders},
      {8, "bit-sequence embedding transports E0 to H0", 2.0, criterion_jembed},
      {9, "value-set surrogate and summand detection", 1.0, criterion_xalpha},
      {10, "direct-sum pairing matches the product relation", 5.0, criterion_product},
      {11, "reducibility registry", 1.0, criterion_hierarchy},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_seconds;
    if (!in_budget && detail.empty())
      detail = "runtime " + std::to_string(secs) + "s over budget";
    pass = pass && in_budget;
    failures += pass ? 0 : 1;
    std::printf("%s  %2d  %-52s [%6.2f s < %4.1f s]%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                secs, c.budget_seconds, detail.empty() ? "" : "  -- ", detail.c_str());
  }
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
