#pragma once

#include <cstdint>

namespace linkcube {

// splitmix64 finalizer; used to derive independent per-sample streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// PCG32 (Melissa O'Neill's pcg32_random_r).
struct Pcg32 {
  std::uint64_t state = 0;
  std::uint64_t inc = 1;

  Pcg32(std::uint64_t seed, std::uint64_t stream) {
    inc = (stream << 1u) | 1u;
    state = 0;
    next();
    state += seed;
    next();
  }

  std::uint32_t next() {
    std::uint64_t old = state;
    state = old * 6364136223846793005ULL + inc;
    std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  // Uniform in the open interval (0,1), 32-bit granularity.
  double uniform01() {
    constexpr double inv = 1.0 / 4294967296.0;
    return (static_cast<double>(next()) + 0.5) * inv;
  }
};

// Identifies one logical Monte Carlo sample.  The derived stream is a fixed
// function of (master_seed, sample_index, attempt), so results are
// reproducible for any thread count and execution order.  `attempt` bumps the
// stream when a degenerate configuration forces a resample.
struct SeedSpec {
  std::uint64_t master_seed = 1;
  std::uint64_t sample_index = 0;
};

inline Pcg32 sample_rng(const SeedSpec& s, std::uint64_t attempt = 0) {
  std::uint64_t h = mix64(s.master_seed);
  h = mix64(h ^ mix64(s.sample_index));
  h = mix64(h ^ mix64(attempt));
  return Pcg32(h, mix64(h));
}

// Independent sub-master seed for a named purpose (one per estimator, etc).
inline std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t tag) {
  return mix64(mix64(master_seed) ^ tag);
}

}  // namespace linkcube
