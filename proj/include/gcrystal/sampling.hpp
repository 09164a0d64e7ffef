#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gcrystal/crystal.hpp"
#include "gcrystal/errors.hpp"

namespace gcrystal {

/// Deterministic generator for random test points.
///
/// Engine is std::mt19937_64 (fully specified by the standard); integers in
/// [lo, hi] are drawn by rejection on the raw 64-bit output, so a seed
/// reproduces the same stream on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  /// Seed derived from a global seed and a case key (FNV-1a of the key
  /// mixed with the seed through splitmix64).
  Sampler(std::uint64_t seed, std::string_view key);

  std::uint64_t next() { return engine_(); }
  long uniform_int(long lo, long hi);
  double uniform_real(double lo, double hi);

  /// p/q with p in 1..100, q in 1..10.
  Rational positive_rational();
  FactorPoint factor_point(int n);
  ProductPoint product_point(int n, int m);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);

/// Calls `draw` until `defined` accepts the sample; a PoleError thrown by
/// `defined` also rejects it. Throws std::runtime_error after max_attempts.
template <class Draw, class Defined>
auto redraw_until(Draw&& draw, Defined&& defined, int max_attempts = 1000) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto sample = draw();
    try {
      if (defined(sample)) return sample;
    } catch (const PoleError&) {
    }
  }
  throw std::runtime_error("no regular sample after " + std::to_string(max_attempts) + " draws");
}

}  // namespace gcrystal
