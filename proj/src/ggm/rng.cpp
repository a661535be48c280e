#include "ggm/rng.hpp"

namespace ggm {

namespace {

constexpr uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(uint32_t ctr[4], const uint32_t key[2]) {
  uint64_t prod0 = static_cast<uint64_t>(kPhiloxM0) * ctr[0];
  uint64_t prod1 = static_cast<uint64_t>(kPhiloxM1) * ctr[2];
  uint32_t hi0 = static_cast<uint32_t>(prod0 >> 32);
  uint32_t lo0 = static_cast<uint32_t>(prod0);
  uint32_t hi1 = static_cast<uint32_t>(prod1 >> 32);
  uint32_t lo1 = static_cast<uint32_t>(prod1);
  uint32_t out[4];
  out[0] = hi1 ^ ctr[1] ^ key[0];
  out[1] = lo1;
  out[2] = hi0 ^ ctr[3] ^ key[1];
  out[3] = lo0;
  ctr[0] = out[0];
  ctr[1] = out[1];
  ctr[2] = out[2];
  ctr[3] = out[3];
}

}  // namespace

void Rng::refill() {
  uint32_t ctr[4] = {
      static_cast<uint32_t>(counter_), static_cast<uint32_t>(counter_ >> 32),
      static_cast<uint32_t>(stream_), static_cast<uint32_t>(stream_ >> 32)};
  uint32_t key[2] = {static_cast<uint32_t>(seed_),
                     static_cast<uint32_t>(seed_ >> 32)};
  for (int round = 0; round < 10; ++round) {
    philox_round(ctr, key);
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  buf_[0] = ctr[0];
  buf_[1] = ctr[1];
  buf_[2] = ctr[2];
  buf_[3] = ctr[3];
  ++counter_;
  buf_pos_ = 0;
}

double rnorm(Rng& rng) {
  // u1 is bumped away from 0 so the log stays finite.
  double u1 = rng.uniform();
  double u2 = rng.uniform();
  u1 = u1 > 0.0 ? u1 : 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

double rexp(Rng& rng, double rate) {
  require(rate > 0.0, ErrorCode::InvalidArgument, "rexp: rate must be > 0");
  double u = rng.uniform();
  u = u > 0.0 ? u : 0x1.0p-53;
  return -std::log(u) / rate;
}

double rgamma(Rng& rng, double shape, double rate) {
  require(shape > 0.0 && rate > 0.0, ErrorCode::InvalidArgument,
          "rgamma: shape and rate must be > 0");
  if (shape < 1.0) {
    // boost: Ga(a) = Ga(a+1) * U^{1/a}
    double u = rng.uniform();
    u = u > 0.0 ? u : 0x1.0p-53;
    return rgamma(rng, shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = rnorm(rng);
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = rng.uniform();
    u = u > 0.0 ? u : 0x1.0p-53;
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v / rate;
    }
  }
}

}  // namespace ggm
