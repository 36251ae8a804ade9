#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "redlab/errors.hpp"
#include "redlab/rational.hpp"

namespace redlab {

// ---------------------------------------------------------------------------
// Finitely-describable points of X_0 = Prod_{k>=1} {0..k-1}.
// ---------------------------------------------------------------------------

/// Tail rules. A constant tail caps at the coordinate ceiling; a slope tail
/// applies per-residue slopes as a(k) = min(floor(r_{k mod m} (k-1)), k-1).
/// Slopes generalize the affine rule so that the image of the bit-sequence
/// embedding is representable exactly.
struct ConstantTail {
  std::uint64_t c = 0;
};

struct SlopeTail {
  std::vector<Rational> slopes;  // each in [0, 1], indexed by k mod size
};

using Tail = std::variant<ConstantTail, SlopeTail>;

inline Tail affine_tail(const Rational& r) { return SlopeTail{{r}}; }
inline Tail zero_tail() { return ConstantTail{0}; }

class PointX0 {
public:
  PointX0(std::vector<std::uint64_t> prefix, Tail tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    for (std::size_t i = 0; i < prefix_.size(); ++i)
      require(prefix_[i] <= i, errc::invalid_point,
              "coordinate " + std::to_string(i + 1) + " exceeds its ceiling");
    if (const auto* s = std::get_if<SlopeTail>(&tail_)) {
      require(!s->slopes.empty(), errc::invalid_point, "slope tail needs at least one slope");
      for (const auto& r : s->slopes)
        require(r >= 0 && r <= 1, errc::invalid_point, "slopes must lie in [0, 1]");
    }
  }

  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }

  /// Coordinate at position k >= 1 (coordinate 1 is always 0).
  std::uint64_t coord(std::uint64_t k) const {
    require(k >= 1, errc::invalid_input, "coordinates are indexed from 1");
    if (k <= prefix_.size()) return prefix_[k - 1];
    if (const auto* c = std::get_if<ConstantTail>(&tail_)) return std::min(c->c, k - 1);
    const auto& s = std::get<SlopeTail>(tail_);
    const auto& r = s.slopes[k % s.slopes.size()];
    BigInt v = floor_div(rat_num(r) * BigInt(k - 1), rat_den(r));
    BigInt cap(k - 1);
    if (v > cap) v = cap;
    return v.convert_to<std::uint64_t>();
  }

  std::uint64_t tail_period() const {
    if (std::holds_alternative<ConstantTail>(tail_)) return 1;
    return std::get<SlopeTail>(tail_).slopes.size();
  }

  /// Asymptotic slope on the residue class j (mod any multiple of the tail
  /// period); constants have slope 0 everywhere.
  Rational slope_at(std::uint64_t j) const {
    if (std::holds_alternative<ConstantTail>(tail_)) return Rational(0);
    const auto& s = std::get<SlopeTail>(tail_).slopes;
    return s[j % s.size()];
  }

private:
  std::vector<std::uint64_t> prefix_;
  Tail tail_;
};

// ---------------------------------------------------------------------------
// Eventually periodic sequences (points of 2^w and R^w).
// ---------------------------------------------------------------------------

template <class T>
class PeriodicPoint {
public:
  PeriodicPoint(std::vector<T> prefix, std::vector<T> period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    require(!period_.empty(), errc::invalid_point, "period must be non-empty");
  }

  const std::vector<T>& prefix() const { return prefix_; }
  const std::vector<T>& period() const { return period_; }

  /// Value at index k >= 0.
  const T& value(std::uint64_t k) const {
    if (k < prefix_.size()) return prefix_[k];
    return period_[(k - prefix_.size()) % period_.size()];
  }

private:
  std::vector<T> prefix_;
  std::vector<T> period_;
};

using BitPoint = PeriodicPoint<int>;
using RealSeqPoint = PeriodicPoint<Rational>;

inline BitPoint make_bit_point(std::vector<int> prefix, std::vector<int> period) {
  for (int b : prefix) require(b == 0 || b == 1, errc::invalid_point, "bits must be 0 or 1");
  for (int b : period) require(b == 0 || b == 1, errc::invalid_point, "bits must be 0 or 1");
  return BitPoint(std::move(prefix), std::move(period));
}

// ---------------------------------------------------------------------------
// Points of P^w at the fidelity the l_p^inf construction needs: a finite
// list cycled forever, so every value occurs infinitely often.
// ---------------------------------------------------------------------------

class CycleListPoint {
public:
  CycleListPoint(std::vector<Rational> values, Rational lo, Rational hi)
      : values_(std::move(values)), lo_(std::move(lo)), hi_(std::move(hi)) {
    require(!values_.empty(), errc::invalid_point, "value list must be non-empty");
    require(lo_ < hi_, errc::invalid_point, "interval is empty");
    for (const auto& v : values_)
      require(v > lo_ && v < hi_, errc::invalid_point,
              "value " + redlab::to_string(v) + " is not strictly inside the interval");
  }

  const std::vector<Rational>& values() const { return values_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  const Rational& value(std::uint64_t k) const { return values_[k % values_.size()]; }

  std::set<Rational> value_set() const { return {values_.begin(), values_.end()}; }

  bool same_interval(const CycleListPoint& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_;
  }

private:
  std::vector<Rational> values_;
  Rational lo_, hi_;
};

/// The interval P used for base exponent p: ](p+1)/2, 2[.
inline std::pair<Rational, Rational> interval_for_base(const Rational& p) {
  return {(p + 1) / 2, Rational(2)};
}

}  // namespace redlab
