#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace strongdim::bits {

inline int word_count(int nbits) { return (nbits + 63) / 64; }

inline bool test(std::span<const std::uint64_t> w, int i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> w, int i) {
  w[i >> 6] |= std::uint64_t{1} << (i & 63);
}

inline void reset(std::span<std::uint64_t> w, int i) {
  w[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

inline int popcount(std::span<const std::uint64_t> w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

inline bool any(std::span<const std::uint64_t> w) {
  for (auto x : w)
    if (x) return true;
  return false;
}

/// Index of the lowest set bit, or -1.
inline int first(std::span<const std::uint64_t> w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return int(i << 6) + std::countr_zero(w[i]);
  return -1;
}

template <class F>
inline void for_each(std::span<const std::uint64_t> w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint64_t x = w[i];
    while (x) {
      f(int(i << 6) + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

}  // namespace strongdim::bits
