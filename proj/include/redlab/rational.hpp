#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "redlab/errors.hpp"

namespace redlab {

// Exact rational arithmetic. Slope and value-set comparisons must be exact,
// never tolerant, so everything here is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0 assumed; rounds toward -inf.
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline BigInt rat_floor(const Rational& r) { return floor_div(rat_num(r), rat_den(r)); }

// Accepts "3/2", "-1/4", "7", and finite decimals like "1.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  require(!s.empty(), errc::malformed, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      require(den != 0, errc::malformed, "zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  } catch (const std::exception&) {
    fail(errc::malformed, "bad rational literal '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

inline std::int64_t to_int64(const BigInt& v, const char* what) {
  require(v >= std::numeric_limits<std::int64_t>::min() &&
              v <= std::numeric_limits<std::int64_t>::max(),
          errc::invalid_input, std::string(what) + " exceeds 64-bit range");
  return v.convert_to<std::int64_t>();
}

}  // namespace redlab
