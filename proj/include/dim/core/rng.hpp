#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace dim {

// All randomness in the pipeline flows through purpose-keyed counter streams:
// a stream is a pure function of (seed, purpose, key1, key2), so independent
// consumers (noise sampling, pool selection, data sampling, weight init) never
// perturb each other and any iteration can be replayed in isolation.
enum class RngPurpose : uint64_t {
  GenInit = 1,
  DiscInit = 2,
  ClassifierInit = 3,
  Noise = 4,
  Labels = 5,
  RealSample = 6,
  PoolSelect = 7,
  PoolInit = 8,
  ToyData = 9,
  Augment = 10,
  DeployNoise = 11,
  DeployLabels = 12,
  DeployInit = 13,
  Shuffle = 14,
  Probe = 15,
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xoshiro256** seeded from a splitmix64 cascade.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) {
    uint64_t x = seed;
    for (auto& si : s_) si = (x = splitmix64(x));
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased-enough fixed-cost range map (128-bit multiply-shift).
  uint64_t uniform_int(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller; second draw cached.
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.2831853071795864769 * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void fill_normal(T* dst, int64_t n, double mean = 0.0, double std = 1.0) {
    for (int64_t i = 0; i < n; ++i)
      dst[i] = static_cast<T>(mean + std * normal());
  }

  template <typename T>
  void fill_uniform(T* dst, int64_t n, double lo, double hi) {
    for (int64_t i = 0; i < n; ++i) dst[i] = static_cast<T>(uniform(lo, hi));
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
  bool has_cached_ = false;
  double cached_ = 0.0;
};

inline RngStream make_stream(uint64_t seed, RngPurpose purpose,
                             uint64_t key1 = 0, uint64_t key2 = 0) {
  uint64_t h = splitmix64(seed ^ 0xd1b54a32d192ed03ULL);
  h = splitmix64(h ^ static_cast<uint64_t>(purpose));
  h = splitmix64(h ^ key1);
  h = splitmix64(h ^ key2);
  return RngStream(h);
}

}  // namespace dim
