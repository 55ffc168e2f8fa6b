#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wavechain {

// Deterministic RNG with explicit sub-stream derivation. The engine is
// std::mt19937_64 (bit-exact across platforms per the standard); all
// distributions are implemented here because the standard library's are
// implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // SplitMix64 finalizer; derives independent stream seeds from (seed, id).
  static uint64_t mix(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng stream(uint64_t seed, uint64_t id) { return Rng(mix(seed, id)); }

  uint64_t next_u64() { return eng_(); }

  // in [0, 1), 53-bit resolution
  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // inclusive bounds
  int64_t uniform_int(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    // modulo bias is < 2^-50 for our spans; acceptable for simulation use
    return lo + static_cast<int64_t>(eng_() % span);
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // redraws until the value falls in [lo, hi]
  double trunc_normal(double mean, double sd, double lo, double hi) {
    for (;;) {
      double v = normal(mean, sd);
      if (v >= lo && v <= hi) return v;
    }
  }

  template <class It>
  void shuffle(It first, It last) {
    auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      auto j = uniform_int(0, i);
      std::swap(first[i], first[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace wavechain
