#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "vecpr/image.hpp"

namespace vecpr {

/// splitmix64 step; used to derive independent per-stream seeds from a
/// master seed without correlated low bits.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
  return mix64(mix64(master ^ mix64(stream)) + index);
}

/// mt19937_64 with fixed uniform/gaussian extraction so that seeded runs
/// are bit-identical across standard libraries (std distributions are
/// not pinned by the standard).
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t raw() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller; the pair partner is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  cplx gaussian_cplx() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  cplx unit_phase() {
    const double t = 2.0 * std::numbers::pi * uniform();
    return {std::cos(t), std::sin(t)};
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace vecpr
