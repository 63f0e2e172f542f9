#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace msn {

// Deterministic random source. The generator is a fixed algorithm
// (mt19937_64) and all samplers go through explicit inverse-CDF /
// Box-Muller transforms, so the same seed yields the same stream on
// every platform. std::*_distribution is implementation-defined and
// must not be used anywhere results have to be reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; the second value of the pair is discarded so the
  // stream position depends only on the number of calls.
  double gaussian(double mean, double stddev) {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
    return mean + stddev * z;
  }

  // Gaussian conditioned on being strictly positive (rejection).
  double gaussian_positive(double mean, double stddev) {
    for (;;) {
      double x = gaussian(mean, stddev);
      if (x > 0.0) return x;
    }
  }

  double exponential(double rate) {
    double u = uniform01();
    return -std::log1p(-u) / rate;
  }

  // Index in [0, n) without modulo bias worth caring about at n << 2^64.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(gen_() % n);
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix64 step; used to derive independent seed streams from a base
// seed plus arbitrary tags (sweep point, instance number, trial, ...).
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  return mix_seed(mix_seed(base ^ 0x6a09e667f3bcc908ULL) ^ mix_seed(a) ^ (b * 0x9e3779b97f4a7c15ULL));
}

}  // namespace msn
