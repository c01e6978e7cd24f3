#pragma once

#include <cstdint>

namespace scangame {

/// SplitMix64 — small seeded PRNG for reproducible Monte Carlo runs. Blocks
/// of trials derive independent streams from (seed, block index), so totals
/// do not depend on evaluation order.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [0, n) via 128-bit multiply with rejection.
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t threshold = -n % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static SplitMix64 for_block(std::uint64_t seed, std::uint64_t block) {
    SplitMix64 mixer(seed ^ (0xD2B74407B1CE6E93ULL * (block + 1)));
    return SplitMix64(mixer.next());
  }
};

}  // namespace scangame
