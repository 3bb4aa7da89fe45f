#pragma once

#include <cstdint>
#include <random>

#include "takiff/rational.hpp"

namespace takiff_lab {

/// Deterministic integer sampler for "generic point" searches. The stream is
/// fully specified by the seed (mt19937_64 plus a modulo map), so results
/// replay across platforms.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long height) {
    const auto span = static_cast<std::uint64_t>(2 * height + 1);
    return static_cast<long>(rng_() % span) - height;
  }

  Vector vector(std::size_t n, long height) {
    Vector v(n);
    for (auto& x : v) x = integer(height);
    return v;
  }

  /// Height used for trial t (0-based); grows linearly.
  static long height_for_trial(std::size_t t) { return 5 * static_cast<long>(t + 1); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace takiff_lab
