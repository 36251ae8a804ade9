#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "redlab/errors.hpp"
#include "redlab/exponent.hpp"

namespace redlab {

/// One summand l_p^K. The dimension is kept exactly while it fits in 64
/// bits; beyond that only log K is stored and the block is descriptor-only
/// (no coefficient vectors can live in it).
struct BlockSpec {
  Exponent exponent;
  std::uint64_t dim = 0;  // 0 means log-only
  double log_dim = 0.0;

  static BlockSpec exact(Exponent p, std::uint64_t k) {
    require(k >= 1, errc::invalid_input, "block dimension must be >= 1");
    return BlockSpec{p, k, std::log(static_cast<double>(k))};
  }

  static BlockSpec log_only(Exponent p, double log_k) {
    require(log_k >= 0.0 && std::isfinite(log_k), errc::invalid_input,
            "log-dimension must be finite and >= 0");
    return BlockSpec{p, 0, log_k};
  }

  bool has_exact_dim() const { return dim != 0; }

  friend bool operator==(const BlockSpec& a, const BlockSpec& b) {
    return a.exponent == b.exponent && a.dim == b.dim && a.log_dim == b.log_dim;
  }
};

/// Finite truncation of an l_p-sum or c_0-sum of blocks.
class SumSpace {
public:
  static SumSpace lp_sum(Exponent outer, std::vector<BlockSpec> blocks) {
    require(!outer.is_infinite(), errc::invalid_input, "l_p outer exponent must be finite");
    return SumSpace(false, outer, std::move(blocks));
  }

  static SumSpace c0_sum(std::vector<BlockSpec> blocks) {
    return SumSpace(true, Exponent(1.0), std::move(blocks));
  }

  bool is_c0() const { return c0_; }

  /// Outer exponent; a c_0 truncation takes the max, i.e. p = inf.
  Exponent outer_exponent() const { return c0_ ? Exponent::infinity() : outer_; }

  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  std::size_t truncation_len() const { return blocks_.size(); }

  /// Total dimension, when every block is exact and the sum fits.
  std::optional<std::uint64_t> total_dim() const {
    std::uint64_t total = 0;
    for (const auto& b : blocks_) {
      if (!b.has_exact_dim()) return std::nullopt;
      if (total > std::uint64_t(-1) - b.dim) return std::nullopt;
      total += b.dim;
    }
    return total;
  }

  /// Vectors may be instantiated only up to this many coordinates.
  static constexpr std::uint64_t kMaxVectorDim = 1u << 22;

  bool descriptor_only() const {
    auto t = total_dim();
    return !t || *t > kMaxVectorDim;
  }

  friend bool operator==(const SumSpace& a, const SumSpace& b) {
    return a.c0_ == b.c0_ && (a.c0_ || a.outer_ == b.outer_) && a.blocks_ == b.blocks_;
  }

private:
  SumSpace(bool c0, Exponent outer, std::vector<BlockSpec> blocks)
      : c0_(c0), outer_(outer), blocks_(std::move(blocks)) {
    require(!blocks_.empty(), errc::invalid_input, "a SumSpace needs at least one block");
  }

  bool c0_;
  Exponent outer_;
  std::vector<BlockSpec> blocks_;
};

using SumSpacePtr = std::shared_ptr<const SumSpace>;

/// Coefficients grouped by block. Support tests are exact zero tests:
/// inputs are constructed, not measured.
class BlockVector {
public:
  BlockVector(SumSpacePtr space, std::vector<std::vector<double>> coeffs)
      : space_(std::move(space)), coeffs_(std::move(coeffs)) {
    require(space_ != nullptr, errc::invalid_input, "null space");
    require(!space_->descriptor_only(), errc::invalid_input,
            "space is descriptor-only; vectors cannot be instantiated");
    require(coeffs_.size() == space_->blocks().size(), errc::invalid_input,
            "coefficient blocks do not match the space truncation");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      require(coeffs_[i].size() == space_->blocks()[i].dim, errc::invalid_input,
              "block coefficient length does not match block dimension");
  }

  static BlockVector zero(SumSpacePtr space) {
    std::vector<std::vector<double>> c;
    for (const auto& b : space->blocks()) c.emplace_back(b.dim, 0.0);
    return BlockVector(std::move(space), std::move(c));
  }

  const SumSpace& space() const { return *space_; }
  const SumSpacePtr& space_ptr() const { return space_; }
  const std::vector<std::vector<double>>& coeffs() const { return coeffs_; }

  double& at(std::size_t block, std::size_t i) { return coeffs_.at(block).at(i); }
  double at(std::size_t block, std::size_t i) const { return coeffs_.at(block).at(i); }

  /// Nonzero coordinate positions as (block, index) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> support() const {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (std::size_t b = 0; b < coeffs_.size(); ++b)
      for (std::size_t i = 0; i < coeffs_[b].size(); ++i)
        if (coeffs_[b][i] != 0.0) s.emplace_back(b, i);
    return s;
  }

  /// First and last block carrying a nonzero coordinate, if any.
  std::optional<std::pair<std::size_t, std::size_t>> support_block_range() const {
    std::optional<std::size_t> lo, hi;
    for (std::size_t b = 0; b < coeffs_.size(); ++b)
      for (double c : coeffs_[b])
        if (c != 0.0) {
          if (!lo) lo = b;
          hi = b;
          break;
        }
    if (!lo) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

private:
  SumSpacePtr space_;
  std::vector<std::vector<double>> coeffs_;
};

inline bool same_space(const BlockVector& a, const BlockVector& b) {
  return a.space_ptr() == b.space_ptr() || a.space() == b.space();
}

inline bool disjointly_supported(const BlockVector& a, const BlockVector& b) {
  for (std::size_t blk = 0; blk < a.coeffs().size(); ++blk)
    for (std::size_t i = 0; i < a.coeffs()[blk].size(); ++i)
      if (a.coeffs()[blk][i] != 0.0 && b.coeffs()[blk][i] != 0.0) return false;
  return true;
}

}  // namespace redlab
