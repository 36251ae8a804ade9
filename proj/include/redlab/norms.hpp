#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "redlab/errors.hpp"
#include "redlab/exponent.hpp"
#include "redlab/rng.hpp"
#include "redlab/spaces.hpp"

namespace redlab {

// ---------------------------------------------------------------------------
// Finite-dimensional l_p calculus.
// ---------------------------------------------------------------------------

/// (sum |c_i|^p)^{1/p}, max |c_i| for p = inf. Scaled by the max coordinate
/// so that extreme inputs neither overflow nor underflow.
inline double lp_norm(std::span<const double> coeffs, Exponent p) {
  require(!coeffs.empty(), errc::invalid_input, "lp_norm of an empty vector");
  double peak = 0.0;
  for (double c : coeffs) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return 0.0;
  if (p.is_infinite()) return peak;
  const double pv = p.value();
  double acc = 0.0;
  for (double c : coeffs) {
    if (c == 0.0) continue;
    acc += std::pow(std::abs(c) / peak, pv);
  }
  return peak * std::pow(acc, 1.0 / pv);
}

inline double lp_norm(const std::vector<double>& coeffs, Exponent p) {
  return lp_norm(std::span<const double>(coeffs), p);
}

/// Nested norm: per-block l_{p_n} norms combined by the outer exponent
/// (max over the truncation for c_0).
inline double sum_norm(const BlockVector& v) {
  std::vector<double> block_norms;
  block_norms.reserve(v.coeffs().size());
  for (std::size_t b = 0; b < v.coeffs().size(); ++b)
    block_norms.push_back(lp_norm(v.coeffs()[b], v.space().blocks()[b].exponent));
  return lp_norm(block_norms, v.space().outer_exponent());
}

// ---------------------------------------------------------------------------
// Equivalence constants between canonical bases of l_p^K and l_q^K.
// ---------------------------------------------------------------------------

/// K^{|1/p - 1/q|} evaluated in the log domain from log K.
inline double eq_const_from_log_dim(Exponent p, Exponent q, double log_k) {
  if (p == q || log_k == 0.0) return 1.0;
  return std::exp(std::abs(p.inv() - q.inv()) * log_k);
}

/// K^{|1/p - 1/q|}; exactly 1 when p = q or K = 1.
inline double eq_const_closed_form(Exponent p, Exponent q, std::uint64_t k) {
  require(k >= 1, errc::invalid_input, "dimension must be >= 1");
  return eq_const_from_log_dim(p, q, std::log(static_cast<double>(k)));
}

constexpr std::uint64_t kDefaultOracleBound = 64;

/// Brute-force counterpart of eq_const_closed_form. Enumerates the flat
/// support profiles exactly and then attacks the flat-extremizer claim with
/// seeded random coefficient vectors; returns the largest norm ratio seen.
/// By the power-mean inequality no sample may exceed the closed form.
inline double eq_const_oracle(Exponent p, Exponent q, std::uint64_t k, std::uint64_t samples,
                              std::uint64_t seed, std::uint64_t bound = kDefaultOracleBound) {
  require(k >= 1, errc::invalid_input, "dimension must be >= 1");
  require(samples >= 1, errc::invalid_input, "need at least one sample");
  require(k <= bound, errc::oracle_bound_exceeded,
          "K=" + std::to_string(k) + " exceeds the oracle bound " + std::to_string(bound));

  double best = 1.0;
  // (a) flat profiles: s coordinates equal to 1 give ratio s^{1/p - 1/q}.
  for (std::uint64_t s = 1; s <= k; ++s) {
    const double log_s = std::log(static_cast<double>(s));
    const double d = p.inv() - q.inv();
    best = std::max({best, std::exp(d * log_s), std::exp(-d * log_s)});
  }
  // (b) seeded random vectors with log-uniform magnitudes.
  Rng rng(seed);
  std::vector<double> a(k);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& c : a) c = std::exp(rng.uniform(-3.0, 3.0));
    const double np = lp_norm(a, p);
    const double nq = lp_norm(a, q);
    best = std::max({best, np / nq, nq / np});
  }
  return best;
}

struct SandwichBounds {
  double lower = 1.0;
  double upper = 1.0;
  bool holds = true;
};

/// Exponential sandwich around the equivalence constant:
///   e^{|p-q| log K / c^2} <= K^{|1/p-1/q|} <= e^{|p-q| log K},
/// where c bounds both exponents from above.
inline SandwichBounds lemma_2_1_bounds(double p, double q, std::uint64_t k,
                                       double c_upper_bound, double rel_tol = 1e-9) {
  require(p >= 1.0 && q >= 1.0, errc::invalid_input, "exponents must be >= 1");
  require(k >= 1, errc::invalid_input, "dimension must be >= 1");
  require(c_upper_bound >= std::max(p, q), errc::invalid_input,
          "c must bound both exponents from above");
  const double log_k = std::log(static_cast<double>(k));
  const double gap = std::abs(p - q);
  SandwichBounds out;
  out.lower = std::exp(gap * log_k / (c_upper_bound * c_upper_bound));
  out.upper = std::exp(gap * log_k);
  const double cn = eq_const_closed_form(Exponent(p), Exponent(q), k);
  out.holds = cn >= out.lower * (1.0 - rel_tol) && cn <= out.upper * (1.0 + rel_tol);
  return out;
}

// ---------------------------------------------------------------------------
// Lower p-estimates and the disjoint-support inequality.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_common_space(std::span<const BlockVector> vectors, errc kind) {
  require(!vectors.empty(), errc::invalid_input, "empty vector family");
  for (std::size_t i = 1; i < vectors.size(); ++i)
    require(same_space(vectors[0], vectors[i]), kind, "vectors live in different spaces");
}

inline BlockVector family_sum(std::span<const BlockVector> vectors) {
  BlockVector acc = BlockVector::zero(vectors[0].space_ptr());
  for (const auto& v : vectors)
    for (std::size_t b = 0; b < v.coeffs().size(); ++b)
      for (std::size_t i = 0; i < v.coeffs()[b].size(); ++i) acc.at(b, i) += v.coeffs()[b][i];
  return acc;
}

}  // namespace detail

/// Smallest C witnessing the lower p-estimate on this instance:
///   (sum ||x_i||^p)^{1/p} / ||sum x_i||
/// for successive vectors (supports on disjoint, increasing block intervals).
inline double check_lower_p_estimate(std::span<const BlockVector> vectors, Exponent p) {
  detail::check_common_space(vectors, errc::not_successive);
  std::size_t prev_hi = 0;
  bool first = true;
  for (const auto& v : vectors) {
    auto range = v.support_block_range();
    require(range.has_value(), errc::invalid_input, "zero vector has no support interval");
    require(first || range->first > prev_hi, errc::not_successive,
            "supports are not on increasing block intervals");
    prev_hi = range->second;
    first = false;
  }
  std::vector<double> norms;
  norms.reserve(vectors.size());
  for (const auto& v : vectors) norms.push_back(sum_norm(v));
  const double lhs = lp_norm(norms, p);
  const double denom = sum_norm(detail::family_sum(vectors));
  require(denom > 0.0, errc::invalid_input, "sum of the family has norm zero");
  return lhs / denom;
}

struct DisjointSumCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

/// For pairwise disjointly supported y_1..y_k in an l_p-outer space whose
/// block exponents all lie in [p, r]:
///   sum ||y_i|| <= C k^{1/r'} ||sum y_i||,
/// with r the largest block exponent and C a lower p-estimate constant
/// (C = 1 for the canonical decomposition).
inline DisjointSumCheck lemma_2_4_check(std::span<const BlockVector> vectors, Exponent p,
                                        double lower_estimate_c, double rel_tol = 1e-9) {
  detail::check_common_space(vectors, errc::not_disjoint);
  require(!p.is_infinite(), errc::invalid_exponents, "estimate exponent must be finite");
  require(lower_estimate_c >= 1.0, errc::invalid_input, "estimate constant must be >= 1");
  const SumSpace& space = vectors[0].space();
  require(!space.is_c0() && space.outer_exponent() == p, errc::invalid_exponents,
          "ambient space must be an l_p-sum with the given p");
  double r = p.value();
  for (const auto& b : space.blocks()) {
    require(!b.exponent.is_infinite(), errc::invalid_exponents, "block exponents must be finite");
    require(b.exponent.value() >= p.value(), errc::invalid_exponents,
            "every block exponent must be >= p");
    r = std::max(r, b.exponent.value());
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      require(disjointly_supported(vectors[i], vectors[j]), errc::not_disjoint,
              "vectors share a coordinate");

  const double inv_r_conj = 1.0 - 1.0 / r;  // 1/r' with r' the conjugate of r
  DisjointSumCheck out;
  for (const auto& v : vectors) out.lhs += sum_norm(v);
  const double k = static_cast<double>(vectors.size());
  out.rhs = lower_estimate_c * std::pow(k, inv_r_conj) * sum_norm(detail::family_sum(vectors));
  out.holds = out.lhs <= out.rhs * (1.0 + rel_tol);
  return out;
}

}  // namespace redlab
