#pragma once

#include <bit>
#include <cstdint>

namespace queens::detail {

// 128-bit square set. Bit i is square (i / n + 1, i % n + 1), so bit order
// is (x, y) lexicographic order.
struct Mask {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static constexpr Mask bit(int i) {
    return i < 64 ? Mask{std::uint64_t{1} << i, 0} : Mask{0, std::uint64_t{1} << (i - 64)};
  }
  // Bits [0, count).
  static constexpr Mask low(int count) {
    if (count <= 0) return {};
    if (count < 64) return {(std::uint64_t{1} << count) - 1, 0};
    if (count == 64) return {~std::uint64_t{0}, 0};
    if (count >= 128) return {~std::uint64_t{0}, ~std::uint64_t{0}};
    return {~std::uint64_t{0}, (std::uint64_t{1} << (count - 64)) - 1};
  }

  constexpr bool none() const { return (lo | hi) == 0; }
  constexpr bool any() const { return !none(); }
  constexpr bool test(int i) const {
    return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
  }
  constexpr int count() const { return std::popcount(lo) + std::popcount(hi); }
  // Index of the lowest set bit. Precondition: any().
  constexpr int first() const {
    return lo ? std::countr_zero(lo) : 64 + std::countr_zero(hi);
  }
  constexpr void pop_first() {
    if (lo) lo &= lo - 1;
    else hi &= hi - 1;
  }

  constexpr Mask operator&(Mask o) const { return {lo & o.lo, hi & o.hi}; }
  constexpr Mask operator|(Mask o) const { return {lo | o.lo, hi | o.hi}; }
  constexpr Mask operator~() const { return {~lo, ~hi}; }
  constexpr Mask& operator&=(Mask o) { lo &= o.lo; hi &= o.hi; return *this; }
  constexpr Mask& operator|=(Mask o) { lo |= o.lo; hi |= o.hi; return *this; }
  friend constexpr bool operator==(Mask, Mask) = default;
};

}  // namespace queens::detail
