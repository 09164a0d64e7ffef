#include "gcrystal/u_crystal.hpp"

#include <stdexcept>
#include <string>

#include "gcrystal/errors.hpp"
#include "gcrystal/loop_sym.hpp"

namespace gcrystal {

UCrystalContext UCrystalContext::checked(int n, int m) {
  if (n < 2) throw std::invalid_argument("crystal on U needs n > 1");
  if (m < 1) throw std::invalid_argument("crystal on U needs m >= 1");
  return UCrystalContext{n, m};
}

Stats u_stats(const PeriodicBandedMatrix& y, long long k, const UCrystalContext& ctx) {
  if (y.n() != ctx.n) throw DimensionMismatch("u_stats: matrix n differs from context");
  const Rational denom = entry(y, k + 1, k + ctx.m);
  if (denom.is_zero()) {
    throw PoleError("y_{" + std::to_string(k + 1) + "," + std::to_string(k + ctx.m) + "}");
  }
  Rational eps = entry(y, k + 1, k + ctx.m + 1) / denom;
  Rational phi = entry(y, k, k + ctx.m) / denom;
  if (eps.is_zero()) throw PoleError("eps_" + std::to_string(k) + " (gamma denominator)");
  Rational gamma = phi / eps;
  return {std::move(eps), std::move(phi), std::move(gamma)};
}

PeriodicBandedMatrix u_e(const PeriodicBandedMatrix& y, long long k, const Rational& c,
                         const UCrystalContext& ctx) {
  if (c.is_zero()) throw std::invalid_argument("e_k^c requires c != 0");
  const Stats s = u_stats(y, k, ctx);
  const auto left = chevalley(k, (c - Rational(1)) * s.phi, ctx.n);
  const auto right = chevalley(k + ctx.m, (c.inverse() - Rational(1)) * s.eps, ctx.n);
  PeriodicBandedMatrix out = multiply(multiply(left, y), right);
  if (y.band() <= ctx.m && out.band() > ctx.m) {
    throw std::logic_error("e_" + std::to_string(k) + "^c left U^{<=" + std::to_string(ctx.m) + "}");
  }
  return out;
}

int thm_e_case(long long r, long long s, long long k, int m, int n) {
  const bool left = residue(s, n) == residue(k, n);
  const bool right = residue(s, n) == residue(k + m - r + 1, n);
  if (left && right) return 3;
  if (left) return 1;
  if (right) return 2;
  return 4;
}

Rational thm_e_image(long long r, long long s, long long k, const Rational& c, const ProductPoint& x) {
  if (c.is_zero()) throw std::invalid_argument("e_k^c requires c != 0");
  const int n = x.n();
  const int m = x.m();
  const Assignment at = x.assignment();
  auto e = [&](long long deg, long long color) { return poly_eval(loop_e(deg, color, n, m), at); };

  const Stats st = product_stats(x, k);
  const Rational one(1);
  switch (thm_e_case(r, s, k, m, n)) {
    case 1:
      return e(r, k) + (c - one) * st.phi * e(r - 1, k + 1);
    case 2:
      return e(r, k + m - r + 1) + (c.inverse() - one) * st.eps * e(r - 1, k + m - r + 1);
    case 3:
      return e(r, k) + (c - one) * st.phi * e(r - 1, k + 1) + (c.inverse() - one) * st.eps * e(r - 1, k) -
             (one - c) * (one - c) / c * st.eps * st.phi * e(r - 2, k + 1);
    default:
      return e(r, s);
  }
}

bool quotient_check(const ProductPoint& x, long long k, const Rational& c) {
  const auto ctx = UCrystalContext::checked(x.n(), x.m());
  const PeriodicBandedMatrix via_point = from_factors(product_e(x, k, c));
  const PeriodicBandedMatrix via_matrix = u_e(from_factors(x), k, c, ctx);
  if (!(via_point == via_matrix)) return false;
  for (int s = 1; s <= x.n(); ++s) {
    for (int r = 1; r <= x.m(); ++r) {
      if (entry(via_matrix, s, s + r) != thm_e_image(r, s, k, c, x)) return false;
    }
  }
  return true;
}

}  // namespace gcrystal
