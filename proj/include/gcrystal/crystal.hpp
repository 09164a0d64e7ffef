#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gcrystal/poly.hpp"
#include "gcrystal/rational.hpp"

namespace gcrystal {

/// Cartan matrix of type A_{n-1}^{(1)}, indexed by residues mod n.
class CartanData {
 public:
  /// Throws std::invalid_argument unless n > 1.
  explicit CartanData(int n);

  int n() const { return n_; }
  int operator()(long long i, long long j) const;

 private:
  int n_;
};

/// A point (x^{(1)}, ..., x^{(n)}) of the basic crystal; all coordinates
/// nonzero. Colors are residues mod n, so operator[] accepts any integer.
class FactorPoint {
 public:
  explicit FactorPoint(std::vector<Rational> coords);
  FactorPoint(std::initializer_list<Rational> coords)
      : FactorPoint(std::vector<Rational>(coords)) {}

  int n() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](long long color) const { return coords_[residue(color, n()) - 1]; }
  std::span<const Rational> coords() const { return coords_; }
  /// Product of all coordinates; swapped between neighbours by the R-matrix.
  Rational coordinate_product() const;

  friend bool operator==(const FactorPoint&, const FactorPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// A point (x_1, ..., x_m) of the product crystal X_M^m.
class ProductPoint {
 public:
  explicit ProductPoint(std::vector<FactorPoint> factors);
  ProductPoint(std::initializer_list<FactorPoint> factors)
      : ProductPoint(std::vector<FactorPoint>(factors)) {}

  int n() const { return factors_.front().n(); }
  int m() const { return static_cast<int>(factors_.size()); }
  /// 1-based factor access.
  const FactorPoint& factor(int i) const { return factors_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<FactorPoint>& factors() const { return factors_; }

  /// The map x_i^{(s)} -> value used to evaluate loop symmetric functions.
  Assignment assignment() const;

  friend bool operator==(const ProductPoint&, const ProductPoint&) = default;

 private:
  std::vector<FactorPoint> factors_;
};

template <class Scalar>
struct CrystalStats {
  Scalar eps;
  Scalar phi;
  Scalar gamma;
};

using Stats = CrystalStats<Rational>;

/// eps_k, phi_k, gamma_k of a factor sitting at 1-based position `shift`
/// of a product; the shift re-indexes colors so phi_k = x^{(k+shift-1)}.
Stats basic_stats(const FactorPoint& x, int shift, long long k);

/// e_k^c on one factor: x^{(k+shift-1)} *= c, x^{(k+shift)} /= c.
FactorPoint basic_e(const FactorPoint& x, int shift, long long k, const Rational& c);

/// Product-crystal eps/phi/gamma, splitting off the last factor at each step.
/// Throws PoleError if some phi_k(x_i) + eps_k(x_1..x_{i-1}) vanishes.
Stats product_stats(const ProductPoint& x, long long k);

/// Product-crystal e_k^c via the c^+ rule. Throws PoleError on a vanishing
/// c^+ denominator or numerator.
ProductPoint product_e(const ProductPoint& x, long long k, const Rational& c);

}  // namespace gcrystal
