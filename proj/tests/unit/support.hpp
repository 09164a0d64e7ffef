#pragma once

#include <vector>

#include "gcrystal/crystal.hpp"
#include "gcrystal/poly.hpp"
#include "gcrystal/sampling.hpp"

namespace gcrystal::testing {

/// x_1 = (2, 3), x_2 = (5, 7), n = m = 2.
inline ProductPoint running_point() { return ProductPoint{{2, 3}, {5, 7}}; }

inline LoopVarPoly var(int factor, int color, int n) { return LoopVarPoly::variable(VarId::of(factor, color, n)); }

/// Signed rational with small numerator, possibly zero.
inline Rational any_rational(Sampler& rng) {
  return Rational(rng.uniform_int(-50, 50), rng.uniform_int(1, 12));
}

/// Random polynomial in x_1^{(1..3)}, x_2^{(1..3)} (n = 3) of degree <= 4.
inline LoopVarPoly random_poly(Sampler& rng) {
  LoopVarPoly p;
  const long terms = rng.uniform_int(0, 5);
  for (long t = 0; t < terms; ++t) {
    Monomial mono;
    const long deg = rng.uniform_int(0, 4);
    for (long d = 0; d < deg; ++d) {
      mono = mono * Monomial(VarId{static_cast<int>(rng.uniform_int(1, 2)), static_cast<int>(rng.uniform_int(1, 3))});
    }
    p.add_term(mono, any_rational(rng));
  }
  return p;
}

inline Assignment random_assignment(Sampler& rng) {
  Assignment a;
  for (int f = 1; f <= 2; ++f) {
    for (int c = 1; c <= 3; ++c) a[VarId{f, c}] = any_rational(rng);
  }
  return a;
}

}  // namespace gcrystal::testing
