#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace ocdom {

// Hard ceiling for every graph handled by this library. Two machine words
// cover all product instances we ever build (direct powers top out at 128).
inline constexpr int kMaxVertices = 128;

// Fixed-width set of vertex ids in [0, 128).
class Bits {
 public:
  constexpr Bits() = default;

  static constexpr Bits single(int v) {
    Bits b;
    b.set(v);
    return b;
  }

  // {0, 1, ..., n-1}
  static constexpr Bits first_n(int n) {
    assert(n >= 0 && n <= kMaxVertices);
    Bits b;
    if (n >= 64) {
      b.w_[0] = ~0ull;
      b.w_[1] = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
    } else if (n > 0) {
      b.w_[0] = (1ull << n) - 1;
    }
    return b;
  }

  constexpr bool test(int v) const {
    assert(v >= 0 && v < kMaxVertices);
    return (w_[v >> 6] >> (v & 63)) & 1ull;
  }

  constexpr void set(int v) {
    assert(v >= 0 && v < kMaxVertices);
    w_[v >> 6] |= 1ull << (v & 63);
  }

  constexpr void reset(int v) {
    assert(v >= 0 && v < kMaxVertices);
    w_[v >> 6] &= ~(1ull << (v & 63));
  }

  constexpr int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }

  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }

  constexpr Bits& operator|=(const Bits& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr Bits& operator&=(const Bits& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  friend constexpr Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend constexpr Bits operator&(Bits a, const Bits& b) { return a &= b; }

  // *this minus o
  constexpr Bits and_not(const Bits& o) const {
    Bits r;
    r.w_[0] = w_[0] & ~o.w_[0];
    r.w_[1] = w_[1] & ~o.w_[1];
    return r;
  }

  constexpr bool subset_of(const Bits& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  constexpr bool intersects(const Bits& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }

  constexpr bool operator==(const Bits&) const = default;

  // Smallest member, -1 when empty.
  constexpr int lowest() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Smallest member strictly greater than v, -1 when none.
  constexpr int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int word = v >> 6;
    std::uint64_t masked = w_[word] & (~0ull << (v & 63));
    if (masked) return (word << 6) + std::countr_zero(masked);
    if (word == 0 && w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

 private:
  std::uint64_t w_[2] = {0, 0};
};

}  // namespace ocdom
