#include "gcrystal/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gcrystal {

std::string to_string(const VarId& v) {
  return "x_" + std::to_string(v.factor) + "^(" + std::to_string(v.color) + ")";
}

std::ostream& operator<<(std::ostream& os, const VarId& v) { return os << to_string(v); }

Monomial::Monomial(VarId v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      f.push_back(*i++);
    } else if (j->first < i->first) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  f.insert(f.end(), i, a.factors_.end());
  f.insert(f.end(), j, b.factors_.end());
  return out;
}

LoopVarPoly::LoopVarPoly(long constant) : LoopVarPoly(Rational(constant)) {}

LoopVarPoly::LoopVarPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, std::move(constant));
}

LoopVarPoly LoopVarPoly::variable(VarId v) { return monomial(Monomial(v), 1); }

LoopVarPoly LoopVarPoly::monomial(Monomial m, Rational coeff) {
  LoopVarPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
  return p;
}

unsigned LoopVarPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<VarId> LoopVarPoly::variables() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void LoopVarPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LoopVarPoly& LoopVarPoly::operator+=(const LoopVarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LoopVarPoly& LoopVarPoly::operator-=(const LoopVarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LoopVarPoly operator-(const LoopVarPoly& a) {
  LoopVarPoly out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

LoopVarPoly operator*(const LoopVarPoly& a, const LoopVarPoly& b) {
  LoopVarPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LoopVarPoly operator*(const Rational& c, const LoopVarPoly& p) {
  LoopVarPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * coeff);
  return out;
}

std::string LoopVarPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = c == Rational(1);
    if (!unit || m.is_one()) os << c;
    bool first_factor = unit;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << "*";
      first_factor = false;
      os << v;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LoopVarPoly& p) { return os << p.str(); }

// Evaluation clears denominators first: with L the lcm of the value
// denominators and X_v = L*x_v, each term c*prod x^e becomes
// c*prod X^e * L^(D-deg) over the common denominator L^D, so the sum runs in
// integer arithmetic and only the final quotient is canonicalized.
Rational poly_eval(const LoopVarPoly& p, const Assignment& assignment) {
  if (p.is_zero()) return Rational(0);
  const std::vector<VarId> vars = p.variables();

  mpz_class lcm_den = 1;
  std::vector<const Rational*> values;
  values.reserve(vars.size());
  for (const VarId& v : vars) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw MissingVariableError(v);
    values.push_back(&it->second);
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), it->second.raw().get_den_mpz_t());
  }
  mpz_class coeff_den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(coeff_den.get_mpz_t(), coeff_den.get_mpz_t(), c.raw().get_den_mpz_t());
  }

  // powers[idx][e] = X_v^e, grown on demand.
  std::vector<std::vector<mpz_class>> powers(vars.size());
  for (std::size_t idx = 0; idx < vars.size(); ++idx) {
    mpz_class scaled = lcm_den / values[idx]->raw().get_den();
    scaled *= values[idx]->raw().get_num();
    powers[idx] = {mpz_class(1), scaled};
  }
  const unsigned max_degree = p.degree();
  std::vector<mpz_class> lcm_powers{mpz_class(1)};
  for (unsigned d = 1; d <= max_degree; ++d) lcm_powers.push_back(lcm_powers.back() * lcm_den);

  mpz_class total = 0;
  mpz_class term;
  for (const auto& [m, c] : p.terms()) {
    term = coeff_den / c.raw().get_den();
    term *= c.raw().get_num();
    for (const auto& [v, e] : m.factors()) {
      const auto idx = static_cast<std::size_t>(
          std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
      auto& pw = powers[idx];
      while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
      term *= pw[e];
    }
    term *= lcm_powers[max_degree - m.degree()];
    total += term;
  }
  return Rational(total, coeff_den * lcm_powers[max_degree]);
}

bool poly_equal(const LoopVarPoly& p, const LoopVarPoly& q) { return (p - q).is_zero(); }

}  // namespace gcrystal
