#pragma once

#include <cmath>
#include <limits>

#include "redlab/errors.hpp"

namespace redlab {

/// An exponent p in [1, +inf]. Infinity is a tagged value, never a large
/// float, so conjugate arithmetic on the endpoints is exact.
class Exponent {
public:
  Exponent(double value) : v_(value) {  // NOLINT: implicit by design
    require(std::isfinite(value) && value >= 1.0, errc::invalid_input,
            "exponent must be a finite real >= 1");
  }

  static Exponent infinity() {
    Exponent e;
    e.inf_ = true;
    return e;
  }

  bool is_infinite() const { return inf_; }

  double value() const {
    require(!inf_, errc::invalid_input, "finite value of the infinite exponent");
    return v_;
  }

  /// 1/p with 1/inf = 0.
  double inv() const { return inf_ ? 0.0 : 1.0 / v_; }

  Exponent conjugate() const {
    if (inf_) return Exponent(1.0);
    if (v_ == 1.0) return infinity();
    if (v_ == 2.0) return Exponent(2.0);
    return Exponent(v_ / (v_ - 1.0));
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

private:
  Exponent() : v_(std::numeric_limits<double>::quiet_NaN()) {}

  double v_;
  bool inf_ = false;
};

}  // namespace redlab
