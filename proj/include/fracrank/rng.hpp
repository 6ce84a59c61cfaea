#pragma once

#include <cstdint>

namespace fracrank {

// SplitMix64. Deterministic across platforms; std distributions are not,
// so every seeded draw in the project routes through this.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant at our n << 2^64.
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  // Uniform integer in [lo, hi] inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // +1 or -1.
  int sign() { return (next() & 1) ? 1 : -1; }
};

}  // namespace fracrank
