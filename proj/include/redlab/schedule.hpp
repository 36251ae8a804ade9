#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "redlab/errors.hpp"
#include "redlab/spaces.hpp"

namespace redlab {

enum class SumFlavor { lp, c0 };

inline const char* flavor_name(SumFlavor f) { return f == SumFlavor::lp ? "lp" : "c0"; }

struct ScheduleBlock {
  std::optional<std::uint64_t> dim;  // exact K_n while representable
  double log_dim = 0.0;              // always present
  double p = 1.0;                    // p_n
};

/// Sequences (K_n), (p_n) over a base exponent. The l_p flavor follows the
/// decreasing-exponent construction with superexponential K growth; the c_0
/// flavor decreases toward 1 with the wider gap rule and the pairwise
/// separation property.
struct ParamSchedule {
  SumFlavor flavor = SumFlavor::lp;
  double base_p = 1.0;
  int n_max = 0;
  std::vector<ScheduleBlock> blocks;

  double log_k(int n) const { return blocks.at(n - 1).log_dim; }  // 1-based
  double p(int n) const { return blocks.at(n - 1).p; }

  friend bool operator==(const ParamSchedule& a, const ParamSchedule& b) {
    if (a.flavor != b.flavor || a.base_p != b.base_p || a.n_max != b.n_max ||
        a.blocks.size() != b.blocks.size())
      return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
      if (a.blocks[i].dim != b.blocks[i].dim || a.blocks[i].log_dim != b.blocks[i].log_dim ||
          a.blocks[i].p != b.blocks[i].p)
        return false;
    return true;
  }
};

struct ClauseCheck {
  std::string id;
  bool holds = true;
  double slack = std::numeric_limits<double>::infinity();
};

namespace detail {

inline void min_clause(ClauseCheck& c, double slack, bool strict) {
  if (slack < c.slack) {
    c.slack = slack;
    c.holds = strict ? slack > 0.0 : slack >= 0.0;
  }
}

}  // namespace detail

/// Worst-case pairwise separation over all coordinate perturbations: for
/// i < j the perturbed exponents of blocks i and j stay at least
/// i/log K_i apart. Required for c_0 schedules, reported for both flavors.
inline ClauseCheck separation_clause(const ParamSchedule& s) {
  ClauseCheck c{"separation", true, std::numeric_limits<double>::infinity()};
  for (int i = 1; i <= s.n_max; ++i)
    for (int j = i + 1; j <= s.n_max; ++j)
      detail::min_clause(
          c, s.p(i) - s.p(j) - (j - 1) / s.log_k(j) - i / s.log_k(i), /*strict=*/false);
  return c;
}

inline std::vector<ClauseCheck> validate_schedule(const ParamSchedule& s) {
  std::vector<ClauseCheck> out;
  ClauseCheck shape{"finite_params", true, std::numeric_limits<double>::infinity()};
  if (s.n_max < 1 || static_cast<int>(s.blocks.size()) != s.n_max || !std::isfinite(s.base_p) ||
      s.base_p < 1.0) {
    shape.holds = false;
    shape.slack = -1.0;
    out.push_back(shape);
    return out;
  }
  for (const auto& b : s.blocks)
    if (!std::isfinite(b.p) || !std::isfinite(b.log_dim) || b.log_dim <= 0.0 ||
        (b.dim && std::abs(std::log(static_cast<double>(*b.dim)) - b.log_dim) > 1e-6)) {
      shape.holds = false;
      shape.slack = -1.0;
    }
  out.push_back(shape);
  if (!shape.holds) return out;

  const int n_max = s.n_max;
  ClauseCheck decreasing{"p_decreasing"};
  for (int n = 1; n < n_max; ++n) detail::min_clause(decreasing, s.p(n) - s.p(n + 1), true);

  ClauseCheck headroom{"p1_headroom"};
  detail::min_clause(headroom, 2.0 - s.p(1) - 1.0 / s.log_k(1), true);

  if (s.flavor == SumFlavor::lp) {
    ClauseCheck k1{"K1_geq_4"};
    detail::min_clause(k1,
                       s.blocks[0].dim ? static_cast<double>(*s.blocks[0].dim) - 4.0
                                       : s.log_k(1) - std::log(4.0),
                       false);
    ClauseCheck growth{"K_growth"};  // K_n >= n^2 K_{n-1}
    for (int n = 2; n <= n_max; ++n) {
      const auto& cur = s.blocks[n - 1];
      const auto& prev = s.blocks[n - 2];
      if (cur.dim && prev.dim)
        detail::min_clause(growth,
                           static_cast<double>(*cur.dim) -
                               static_cast<double>(n) * n * static_cast<double>(*prev.dim),
                           false);
      else
        detail::min_clause(growth, cur.log_dim - 2.0 * std::log(n) - prev.log_dim, false);
    }
    ClauseCheck range{"p_range"};  // base_p < p_n < 2
    for (int n = 1; n <= n_max; ++n)
      detail::min_clause(range, std::min(s.p(n) - s.base_p, 2.0 - s.p(n)), true);
    ClauseCheck gap{"thm26_gap"};  // p_n - p_{n+1} >= (n+1)/log K_{n+1}
    for (int n = 1; n < n_max; ++n)
      detail::min_clause(gap, s.p(n) - s.p(n + 1) - (n + 1) / s.log_k(n + 1), false);
    ClauseCheck prange{"perturbed_range"};  // e_n = p_n + (n-1)/log K_n stays < 2
    for (int n = 1; n <= n_max; ++n)
      detail::min_clause(prange, 2.0 - s.p(n) - (n - 1) / s.log_k(n), true);
    ClauseCheck pdec{"perturbed_decreasing"};  // perturbed sequences stay decreasing
    for (int n = 1; n < n_max; ++n)
      detail::min_clause(pdec, s.p(n) - s.p(n + 1) - static_cast<double>(n) / s.log_k(n + 1),
                         true);
    out.insert(out.end(), {k1, growth, range, decreasing, headroom, gap, prange, pdec});
  } else {
    ClauseCheck above1{"p_above_1"};
    for (int n = 1; n <= n_max; ++n) detail::min_clause(above1, s.p(n) - 1.0, true);
    ClauseCheck window{"window"};  // 1 < p_n + n/log K_n < 2
    for (int n = 1; n <= n_max; ++n) {
      const double w = s.p(n) + n / s.log_k(n);
      detail::min_clause(window, std::min(w - 1.0, 2.0 - w), true);
    }
    ClauseCheck pwindow{"window_perturbed"};  // worst perturbation keeps the window
    for (int n = 1; n <= n_max; ++n)
      detail::min_clause(pwindow, 2.0 - s.p(n) - (2.0 * n - 1.0) / s.log_k(n), true);
    ClauseCheck ratio{"n_over_logK_decreasing"};
    for (int n = 1; n < n_max; ++n)
      detail::min_clause(ratio, n / s.log_k(n) - (n + 1) / s.log_k(n + 1), true);
    ClauseCheck gap{"thm33_gap"};  // p_n - p_{n+1} >= 2n/log K_n
    for (int n = 1; n < n_max; ++n)
      detail::min_clause(gap, s.p(n) - s.p(n + 1) - 2.0 * n / s.log_k(n), false);
    out.insert(out.end(),
               {above1, decreasing, window, pwindow, ratio, gap, headroom, separation_clause(s)});
  }
  return out;
}

inline bool schedule_valid(const std::vector<ClauseCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

inline const ClauseCheck* first_violated(const std::vector<ClauseCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds) return &c;
  return nullptr;
}

/// Growth rates beyond this are rejected as infeasible; it comfortably covers
/// every sensible (base_p, margin, n_max) while keeping log K_n in a range
/// where the downstream exponentials are meaningful.
constexpr double kMaxGrowthRate = 1024.0;

/// Largest c*n^3 for which K_n = ceil(exp(c n^3)) is kept as an integer.
constexpr double kMaxExactLogDim = 42.9;

/// Builds a schedule satisfying every clause of validate_schedule with ~10%
/// slack. K_n = ceil(exp(c n^3)); the growth rate c is the smallest value
/// that fits the gap budget margin*(2 - base_p)/4 (margin/4 for c_0), the
/// headroom constraint on p_1 and the K-growth constraints.
inline ParamSchedule gen_params(SumFlavor flavor, double base_p, int n_max, double margin) {
  require(std::isfinite(base_p) && base_p >= 1.0 && base_p < 2.0, errc::invalid_input,
          "base exponent must lie in [1, 2)");
  require(n_max >= 1, errc::invalid_input, "n_max must be >= 1");
  require(std::isfinite(margin) && margin > 0.0 && margin < 1.0, errc::invalid_input,
          "margin must lie in (0, 1)");

  const bool lp = flavor == SumFlavor::lp;
  const double budget = lp ? margin * (2.0 - base_p) / 4.0 : margin / 4.0;
  double gap_sum = 0.0;  // sum of unit-rate gaps, two virtual blocks past n_max
  for (int n = 1; n <= n_max + 1; ++n) {
    const double nn = n;
    gap_sum += lp ? 1.0 / ((nn + 1) * (nn + 1)) + 2.0 / (nn * nn) : 2.0 / (nn * nn);
  }
  const double c_budget = 1.1 * gap_sum / budget;
  const double c_headroom =
      lp ? 2.2 / (2.0 - base_p) : 1.1 / (1.0 - margin / 2.0);
  const double c = std::max({1.0, 1.1 * std::log(4.0), c_budget, c_headroom});
  if (c > kMaxGrowthRate)
    fail(errc::infeasible,
         "gap budget " + std::to_string(budget) + " needs growth rate c=" + std::to_string(c) +
             " > " + std::to_string(kMaxGrowthRate) +
             " (first violated: " + (c_budget >= c_headroom ? "gap budget" : "p1_headroom") + ")");

  ParamSchedule s;
  s.flavor = flavor;
  s.base_p = base_p;
  s.n_max = n_max;
  s.blocks.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const double log_dim = c * static_cast<double>(n) * n * n;
    auto& b = s.blocks[n - 1];
    if (log_dim <= kMaxExactLogDim) {
      b.dim = static_cast<std::uint64_t>(std::ceil(std::exp(log_dim)));
      b.log_dim = std::log(static_cast<double>(*b.dim));
    } else {
      b.log_dim = log_dim;
    }
  }
  s.blocks[0].p = lp ? base_p + (2.0 - base_p) / 2.0 : 1.0 + margin / 2.0;
  for (int n = 1; n < n_max; ++n) {
    const double gap = lp ? 1.1 * ((n + 1) / s.log_k(n + 1) + 2.0 * n / s.log_k(n))
                          : 1.1 * (2.0 * n / s.log_k(n));
    s.blocks[n].p = s.blocks[n - 1].p - gap;
  }

  const auto checks = validate_schedule(s);
  if (const auto* bad = first_violated(checks))
    fail(errc::infeasible, "generated schedule violates clause '" + bad->id +
                               "' (slack " + std::to_string(bad->slack) + ")");
  return s;
}

}  // namespace redlab
