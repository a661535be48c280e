#pragma once

#include <cmath>
#include <cstdint>

#include "ggm/error.hpp"

namespace ggm {

// Counter-based generator (Philox4x32-10). Streams forked from the same seed
// are statistically independent, and a draw depends only on (seed, stream,
// counter), so results do not depend on sharing or scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : seed_(seed), stream_(stream), counter_(0), buf_pos_(4) {}

  // Derives an independent stream; used to give replicates, columns and
  // Monte-Carlo workers their own generators.
  Rng fork(uint64_t substream) const {
    return Rng(seed_, mix(stream_, substream));
  }

  uint32_t next_u32() {
    if (buf_pos_ == 4) refill();
    return buf_[buf_pos_++];
  }

  uint64_t next_u64() {
    uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n), unbiased.
  uint64_t uniform_int(uint64_t n) {
    require(n > 0, ErrorCode::InvalidArgument, "uniform_int: n must be > 0");
    uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

 private:
  static uint64_t mix(uint64_t a, uint64_t b) {
    // splitmix64 finalizer over the pair
    uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  void refill();

  uint64_t seed_;
  uint64_t stream_;
  uint64_t counter_;
  uint32_t buf_[4];
  int buf_pos_;
};

// Standard normal via Box-Muller (stateless per call).
double rnorm(Rng& rng);

// Exponential with given rate.
double rexp(Rng& rng, double rate);

// Gamma(shape, rate) via Marsaglia-Tsang.
double rgamma(Rng& rng, double shape, double rate);

}  // namespace ggm
