#include "gcrystal/sampling.hpp"

#include <stdexcept>

namespace gcrystal {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view key) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return splitmix64(seed ^ h);
}

Sampler::Sampler(std::uint64_t seed, std::string_view key) : engine_(derive_seed(seed, key)) {}

long Sampler::uniform_int(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Largest multiple of span that fits, to reject the biased tail.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

double Sampler::uniform_real(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Rational Sampler::positive_rational() {
  const long p = uniform_int(1, 100);
  const long q = uniform_int(1, 10);
  return Rational(p, q);
}

FactorPoint Sampler::factor_point(int n) {
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) coords.push_back(positive_rational());
  return FactorPoint(std::move(coords));
}

ProductPoint Sampler::product_point(int n, int m) {
  std::vector<FactorPoint> factors;
  factors.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) factors.push_back(factor_point(n));
  return ProductPoint(std::move(factors));
}

}  // namespace gcrystal
