#pragma once

#include <cstdint>

#include "cevian/triangle.hpp"

namespace cevian {

// Deterministic pseudo-random rational values for verification campaigns.
// Draws come straight off a seeded 64-bit engine (no distribution adapters),
// so a given seed yields the same corpus on every platform.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    // Numerator in [-bound, bound], denominator in [1, bound].
    Rational rational(long long bound = 1000);
    GaussianRational point(long long bound = 1000);
    // Non-collinear; redraws until |signed area| >= min_area so that float
    // cross-checks stay well conditioned.
    Triangle triangle(long long bound = 1000, const Rational& min_area = Rational(1));

  private:
    std::uint64_t state_;

    std::uint64_t next();
};

}  // namespace cevian
