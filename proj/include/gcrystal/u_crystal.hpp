#pragma once

#include "gcrystal/crystal.hpp"
#include "gcrystal/whirl.hpp"

namespace gcrystal {

/// Crystal structure on U^{<=m}: n colors, band m.
struct UCrystalContext {
  int n;
  int m;

  /// Throws std::invalid_argument unless n > 1 and m >= 1.
  static UCrystalContext checked(int n, int m);
};

/// eps_k = y_{k+1,k+m+1} / y_{k+1,k+m}, phi_k = y_{k,k+m} / y_{k+1,k+m}.
/// Throws PoleError when y_{k+1,k+m} = 0.
Stats u_stats(const PeriodicBandedMatrix& y, long long k, const UCrystalContext& ctx);

/// Y -> u_k((c-1) phi_k) Y u_{k+m}((c^{-1}-1) eps_k). If band(Y) <= m the
/// result must stay in U^{<=m}; a violation throws std::logic_error.
PeriodicBandedMatrix u_e(const PeriodicBandedMatrix& y, long long k, const Rational& c,
                         const UCrystalContext& ctx);

/// Which of the four cases describes (e_k^c)^* e_r^{(s)}:
///   1: s = k != k+m-r+1, 2: s = k+m-r+1 != k, 3: s = k = k+m-r+1, 4: otherwise
/// (all mod n).
int thm_e_case(long long r, long long s, long long k, int m, int n);

/// Value of (e_k^c)^* e_r^{(s)} at x from the four-case formula, using the
/// loop elementary symmetric functions and product_stats at x.
Rational thm_e_image(long long r, long long s, long long k, const Rational& c, const ProductPoint& x);

/// True iff M(e_k^c x) = e_k^c M(x) entrywise and every band entry of
/// e_k^c M(x) agrees with thm_e_image.
bool quotient_check(const ProductPoint& x, long long k, const Rational& c);

/// Adapter for check_axioms_with: the crystal on U^{<=m}, exact.
struct UCrystalModel {
  using Point = PeriodicBandedMatrix;
  using Scalar = Rational;

  UCrystalContext ctx;
  int n() const { return ctx.n; }
  Stats stats(const Point& y, int k) const { return u_stats(y, k, ctx); }
  Point act(const Point& y, int k, const Scalar& c) const { return u_e(y, k, c, ctx); }
  bool same_value(const Scalar& a, const Scalar& b, int) const { return a == b; }
  bool same_point(const Point& a, const Point& b, int) const { return a == b; }
  Scalar power(const Scalar& c, int e) const { return c.pow(e); }
};

}  // namespace gcrystal
