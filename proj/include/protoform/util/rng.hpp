#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace protoform {

// Seeded RNG with self-contained samplers. std::* distributions are
// implementation-defined, so the samplers here own the bit-to-value mapping
// and runs reproduce on any build of the same platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(u64() >> 11) * 0x1.0p-53;
  }

  float uniform(float lo, float hi) {
    return lo + static_cast<float>(uniform()) * (hi - lo);
  }

  // Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller.
  float gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * M_PI * u2;
    spare_ = static_cast<float>(r * std::sin(theta));
    has_spare_ = true;
    return static_cast<float>(r * std::cos(theta));
  }

  // Derives an independent stream; distinct tags give distinct streams.
  Rng fork(std::uint64_t tag) const {
    std::mt19937_64 g(seed_mix_ ^ (tag * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL));
    Rng r(g());
    return r;
  }

  explicit Rng(std::uint64_t seed, bool)
      : gen_(seed), seed_mix_(seed) {}

  static Rng master(std::uint64_t seed) {
    Rng r(seed, true);
    return r;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.empty()) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::size_t j = uniform_index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_mix_ = 0;
  float spare_ = 0.f;
  bool has_spare_ = false;
};

}  // namespace protoform
