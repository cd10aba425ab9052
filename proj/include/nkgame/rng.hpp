#pragma once

#include <cstdint>

namespace nkgame {

// splitmix64 finalizer; also used to derive per-trial stream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Stream for trial i is seeded with mix64(master_seed + GOLDEN * (i + 1)),
// so trials are independent of each other and of worker scheduling.
inline std::uint64_t trial_stream_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed + 0x9E3779B97F4A7C15ULL * (trial_index + 1));
}

// Small self-contained generator (splitmix64). Deterministic across
// platforms; all simulation randomness flows through one of these.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., n-1}, unbiased via rejection.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Degenerate p consumes no randomness, so a Rejector and a Bernoulli(0)
  // agent draw identical streams (role-equivalence invariant).
  int bernoulli(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return 1;
    return uniform01() < p ? 1 : 0;
  }

 private:
  std::uint64_t state_;
};

}  // namespace nkgame
