#pragma once

#include <cstdint>

namespace gauss_landau {

// SplitMix64. State update and output mixing:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// All arithmetic is modulo 2^64. uniform(lo, hi) draws by rejection so
// every value in [lo, hi] is equally likely: with span = hi - lo + 1, raw
// outputs r < (2^64 mod span) are discarded and lo + r mod span is
// returned. A span of 2^64 returns the raw output.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();
    const std::uint64_t limit = -span % span;  // 2^64 mod span
    for (;;) {
      const std::uint64_t r = next();
      if (r >= limit) return lo + r % span;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace gauss_landau
