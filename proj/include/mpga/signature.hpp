#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "mpga/error.hpp"

namespace mpga {

/// Identifies one of the supported metric spaces. The Euclidean oracle
/// replaces the single -1 square by +1 and exists for test purposes only.
enum class Space { M2, M3, M4, EuclideanOracle };

/// A basis blade as a bitmask over basis vectors; bit i stands for e_i,
/// with e0 the degenerate direction. Coefficients are always stored
/// against the canonical ascending-index blade.
using BladeMask = std::uint8_t;

/// Metric and dimension of one algebra: the per-basis-vector squares and
/// the space tag. Instances are immutable singletons; multivectors refer
/// to them by pointer.
class Signature {
 public:
  static const Signature& m2();
  static const Signature& m3();
  static const Signature& m4();
  /// Test oracle with the same dimension but all nondegenerate squares +1.
  static const Signature& euclidean_oracle(int dim_total);
  static const Signature& for_space(Space space);

  int dim_total() const { return dim_; }
  int mv_size() const { return 1 << dim_; }
  int square(int basis_index) const { return squares_[basis_index]; }
  Space tag() const { return tag_; }
  BladeMask full_mask() const { return static_cast<BladeMask>(mv_size() - 1); }

  bool operator==(const Signature& other) const {
    return dim_ == other.dim_ && tag_ == other.tag_ &&
           squares_ == other.squares_;
  }
  bool operator!=(const Signature& other) const { return !(*this == other); }

  std::string name() const;

 private:
  Signature(int dim, std::array<std::int8_t, 5> squares, Space tag)
      : dim_(dim), squares_(squares), tag_(tag) {}

  int dim_;
  std::array<std::int8_t, 5> squares_;
  Space tag_;
};

inline int grade_of(BladeMask mask) { return std::popcount(mask); }

/// Sign of sorting the concatenation of two ascending blades into
/// ascending order; counts transpositions of pairs (i in a, j in b, i > j).
inline int reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  unsigned rest = static_cast<unsigned>(a) >> 1;
  while (rest != 0) {
    swaps += std::popcount(rest & b);
    rest >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Product of two canonical basis blades under the metric: the repeated
/// basis vectors contract to their squares (the degenerate e0 annihilates),
/// the rest concatenate with the permutation sign. Returns the signed
/// coefficient of the resulting canonical blade a ^ b, or 0.
inline int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) {
  int sign = reorder_sign(a, b);
  unsigned common = static_cast<unsigned>(a & b);
  while (common != 0) {
    int i = std::countr_zero(common);
    sign *= sig.square(i);
    common &= common - 1;
  }
  return sign;
}

/// Reversal sign (-1)^(k(k-1)/2) for grade k.
inline int reverse_sign(int grade) {
  return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
}

/// Sign s such that blade(mask) ^ blade(full ^ mask) = s * I. Fixes the
/// basis complement used by the metric-free join.
inline int complement_sign(const Signature& sig, BladeMask mask) {
  return reorder_sign(mask, static_cast<BladeMask>(sig.full_mask() ^ mask));
}

}  // namespace mpga
