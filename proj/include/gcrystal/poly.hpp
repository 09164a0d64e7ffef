#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcrystal/rational.hpp"

namespace gcrystal {

/// Canonical representative of `value` modulo n in 1..n (0 is stored as n).
constexpr int residue(long long value, int n) {
  long long r = value % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

/// The variable x_factor^{(color)}; color is always a canonical residue.
struct VarId {
  int factor = 1;
  int color = 1;

  static VarId of(int factor, long long color, int n) { return VarId{factor, residue(color, n)}; }

  friend auto operator<=>(const VarId&, const VarId&) = default;
  friend bool operator==(const VarId&, const VarId&) = default;
};

std::string to_string(const VarId& v);
std::ostream& operator<<(std::ostream& os, const VarId& v);

class MissingVariableError : public std::out_of_range {
 public:
  explicit MissingVariableError(VarId v)
      : std::out_of_range("assignment does not cover " + to_string(v)), var_(v) {}
  VarId var() const { return var_; }

 private:
  VarId var_;
};

/// Product of variables with positive exponents, kept sorted by VarId.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, unsigned exponent = 1);

  const std::vector<std::pair<VarId, unsigned>>& factors() const { return factors_; }
  unsigned degree() const;
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, unsigned>> factors_;
};

using Assignment = std::map<VarId, Rational>;

/// Sparse polynomial over Q in the loop variables x_i^{(s)}.
class LoopVarPoly {
 public:
  LoopVarPoly() = default;
  LoopVarPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LoopVarPoly(Rational constant);
  static LoopVarPoly variable(VarId v);
  static LoopVarPoly monomial(Monomial m, Rational coeff = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const;
  std::vector<VarId> variables() const;

  /// Adds c*m in place; drops the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  LoopVarPoly& operator+=(const LoopVarPoly& o);
  LoopVarPoly& operator-=(const LoopVarPoly& o);
  LoopVarPoly& operator*=(const LoopVarPoly& o) { return *this = *this * o; }

  friend LoopVarPoly operator+(LoopVarPoly a, const LoopVarPoly& b) { return a += b; }
  friend LoopVarPoly operator-(LoopVarPoly a, const LoopVarPoly& b) { return a -= b; }
  friend LoopVarPoly operator-(const LoopVarPoly& a);
  friend LoopVarPoly operator*(const LoopVarPoly& a, const LoopVarPoly& b);
  friend LoopVarPoly operator*(const Rational& c, const LoopVarPoly& p);

  friend bool operator==(const LoopVarPoly&, const LoopVarPoly&) = default;

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const LoopVarPoly& p);

/// Exact value of p at the assignment. Throws MissingVariableError naming
/// the first uncovered variable.
Rational poly_eval(const LoopVarPoly& p, const Assignment& assignment);

/// True iff p - q is the zero polynomial.
bool poly_equal(const LoopVarPoly& p, const LoopVarPoly& q);

}  // namespace gcrystal
