#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace redlab {

/// FNV-1a over bytes; used for case digests and sub-seed derivation.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Each verification case derives its own seed from (run seed, case id), so
/// results do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view case_id) {
  return splitmix64(seed ^ fnv1a(case_id));
}

/// Thin deterministic wrapper over mt19937_64; the mapping from raw engine
/// words to doubles/ints is spelled out here instead of using std
/// distributions, whose outputs are not pinned by the standard.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  /// Uniform integer in [lo, hi]; modulo bias is irrelevant for test inputs.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin(double p = 0.5) { return u01() < p; }

private:
  std::mt19937_64 eng_;
};

}  // namespace redlab
