#include "gcrystal/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gcrystal {

TranspositionIndex TranspositionIndex::checked(int j, int m) {
  if (j < 1 || j > m - 1) {
    throw std::out_of_range("transposition index " + std::to_string(j) + " outside 1.." +
                            std::to_string(m - 1));
  }
  return TranspositionIndex{j};
}

Rational kappa(const FactorPoint& x, const FactorPoint& y, long long r) {
  if (x.n() != y.n()) throw DimensionMismatch("kappa: factors with different n");
  const int n = x.n();
  Rational total(0);
  for (int s = 0; s < n; ++s) {
    Rational term(1);
    for (int t = 1; t <= s; ++t) term *= y[r + t];
    for (int t = s + 1; t <= n - 1; ++t) term *= x[r + t];
    total += term;
  }
  return total;
}

ProductPoint apply_s(TranspositionIndex j, const ProductPoint& x) {
  const auto idx = TranspositionIndex::checked(j.j, x.m()).j;
  const FactorPoint& left = x.factor(idx);
  const FactorPoint& right = x.factor(idx + 1);
  const int n = x.n();

  // kappa is n-periodic in r; kappas[r-1] holds kappa_r for r = 1..n.
  std::vector<Rational> kappas;
  kappas.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    kappas.push_back(kappa(left, right, r));
    if (kappas.back().is_zero()) {
      throw PoleError("kappa_" + std::to_string(r) + "(x_" + std::to_string(idx) + ",x_" +
                      std::to_string(idx + 1) + ")");
    }
  }
  auto k = [&](long long r) -> const Rational& { return kappas[residue(r, n) - 1]; };

  std::vector<Rational> new_left, new_right;
  new_left.reserve(static_cast<std::size_t>(n));
  new_right.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    new_left.push_back(right[r + 1] * k(r + 1) / k(r));
    new_right.push_back(left[r - 1] * k(r - 1) / k(r));
  }
  std::vector<FactorPoint> factors(x.factors());
  factors[static_cast<std::size_t>(idx - 1)] = FactorPoint(std::move(new_left));
  factors[static_cast<std::size_t>(idx)] = FactorPoint(std::move(new_right));
  return ProductPoint(std::move(factors));
}

WordPoleError::WordPoleError(std::size_t position, const PoleError& cause)
    : PoleError(cause.denominator() + " at word position " + std::to_string(position)),
      position_(position) {}

ProductPoint apply_word(std::span<const int> word, const ProductPoint& x) {
  ProductPoint current = x;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const auto j = TranspositionIndex::checked(word[pos], x.m());
    try {
      current = apply_s(j, current);
    } catch (const PoleError& e) {
      throw WordPoleError(pos, e);
    }
  }
  return current;
}

std::vector<std::vector<int>> reduced_words(int m) {
  if (m < 1) throw std::invalid_argument("reduced_words: m must be positive");
  std::vector<int> identity(static_cast<std::size_t>(m));
  std::iota(identity.begin(), identity.end(), 0);

  std::map<std::vector<int>, std::vector<int>> seen{{identity, {}}};
  std::vector<std::vector<int>> frontier{identity};
  std::vector<std::vector<int>> words{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& perm : frontier) {
      for (int j = 1; j < m; ++j) {
        auto swapped = perm;
        std::swap(swapped[static_cast<std::size_t>(j - 1)], swapped[static_cast<std::size_t>(j)]);
        if (seen.count(swapped)) continue;
        auto word = seen.at(perm);
        word.push_back(j);
        seen.emplace(swapped, word);
        words.push_back(std::move(word));
        next.push_back(std::move(swapped));
      }
    }
    frontier = std::move(next);
  }
  return words;
}

}  // namespace gcrystal
