#pragma once

#include <cstdint>

namespace satmon {

/// splitmix64: a counter-based generator with a 64-bit seed. Chosen for the
/// verify harness because per-trial streams split cheaply (seed xor trial
/// index) and the sequence is identical on every platform.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-enough draw in [0, bound); bound > 0. Modulo bias is
  /// irrelevant at test scales and keeps the stream portable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  /// Inclusive range draw.
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

} // namespace satmon
