#include "gcrystal/crystal.hpp"

#include <stdexcept>

#include "gcrystal/errors.hpp"

namespace gcrystal {

CartanData::CartanData(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Cartan data requires n > 1, got " + std::to_string(n));
}

int CartanData::operator()(long long i, long long j) const {
  const int a = residue(i, n_);
  const int b = residue(j, n_);
  if (a == b) return 2;
  if (n_ == 2) return -2;
  const int diff = residue(a - b, n_);
  return (diff == 1 || diff == n_ - 1) ? -1 : 0;
}

FactorPoint::FactorPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("factor point needs at least one coordinate");
  for (const auto& c : coords_) {
    if (c.is_zero()) throw std::invalid_argument("factor point coordinates must be nonzero");
  }
}

Rational FactorPoint::coordinate_product() const {
  Rational p(1);
  for (const auto& c : coords_) p *= c;
  return p;
}

ProductPoint::ProductPoint(std::vector<FactorPoint> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product point needs at least one factor");
  for (const auto& f : factors_) {
    if (f.n() != factors_.front().n()) throw DimensionMismatch("factors of a product point must share n");
  }
}

Assignment ProductPoint::assignment() const {
  Assignment a;
  for (int i = 1; i <= m(); ++i) {
    for (int s = 1; s <= n(); ++s) a.emplace(VarId{i, s}, factor(i)[s]);
  }
  return a;
}

Stats basic_stats(const FactorPoint& x, int shift, long long k) {
  Rational eps = x[k + shift];
  Rational phi = x[k + shift - 1];
  Rational gamma = phi / eps;
  return {std::move(eps), std::move(phi), std::move(gamma)};
}

FactorPoint basic_e(const FactorPoint& x, int shift, long long k, const Rational& c) {
  if (c.is_zero()) throw std::invalid_argument("e_k^c requires c != 0");
  std::vector<Rational> coords(x.coords().begin(), x.coords().end());
  const int n = x.n();
  coords[residue(k + shift - 1, n) - 1] *= c;
  coords[residue(k + shift, n) - 1] /= c;
  return FactorPoint(std::move(coords));
}

namespace {

std::string prefix_name(int last) {
  return last == 1 ? "x_1" : "x_1..x_" + std::to_string(last);
}

// eps/phi of every prefix x_1..x_i, i = 1..m (index i-1).
std::vector<Stats> prefix_stats(const ProductPoint& x, long long k) {
  std::vector<Stats> out;
  out.reserve(static_cast<std::size_t>(x.m()));
  out.push_back(basic_stats(x.factor(1), 1, k));
  for (int i = 2; i <= x.m(); ++i) {
    const Stats& left = out.back();
    const Stats right = basic_stats(x.factor(i), i, k);
    const Rational denom = right.phi + left.eps;
    if (denom.is_zero()) {
      throw PoleError("phi_" + std::to_string(k) + "(x_" + std::to_string(i) + ")+eps_" +
                      std::to_string(k) + "(" + prefix_name(i - 1) + ")");
    }
    Rational eps = left.eps * right.eps / denom;
    Rational phi = left.phi * right.phi / denom;
    Rational gamma = phi / eps;
    out.push_back({std::move(eps), std::move(phi), std::move(gamma)});
  }
  return out;
}

}  // namespace

Stats product_stats(const ProductPoint& x, long long k) { return prefix_stats(x, k).back(); }

ProductPoint product_e(const ProductPoint& x, long long k, const Rational& c) {
  if (c.is_zero()) throw std::invalid_argument("e_k^c requires c != 0");
  const std::vector<Stats> prefixes = prefix_stats(x, k);
  std::vector<FactorPoint> out(x.factors());
  // e_k^c(x' (x) x_i) = (e_k^{c+} x', e_k^{c/c+} x_i), peeled from the right.
  Rational current = c;
  for (int i = x.m(); i >= 2; --i) {
    const Rational& left_eps = prefixes[static_cast<std::size_t>(i - 2)].eps;
    const Rational right_phi = basic_stats(x.factor(i), i, k).phi;
    const Rational numer = current * right_phi + left_eps;
    if (numer.is_zero()) {
      throw PoleError("c*phi_" + std::to_string(k) + "(x_" + std::to_string(i) + ")+eps_" +
                      std::to_string(k) + "(" + prefix_name(i - 1) + ")");
    }
    const Rational cplus = numer / (right_phi + left_eps);
    out[static_cast<std::size_t>(i - 1)] = basic_e(x.factor(i), i, k, current / cplus);
    current = cplus;
  }
  out[0] = basic_e(x.factor(1), 1, k, current);
  return ProductPoint(std::move(out));
}

}  // namespace gcrystal
