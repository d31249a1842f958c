#pragma once

#include <cstdint>
#include <random>

namespace strongdim {

/// Default seed for every random corpus in the library and the CLI.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Seeded generator with fully pinned-down sampling algorithms, so
/// random corpora reproduce bit-for-bit across platforms.  The engine is
/// std::mt19937_64 (specified by the standard); the distribution code
/// lives here because the standard library's distributions are not
/// portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [lo, hi], inclusive, by rejection below the largest
  /// multiple of the range width.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = std::uint64_t(hi) - lo + 1;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + int(x % span);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace strongdim
