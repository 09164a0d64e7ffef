#pragma once

#include <span>
#include <vector>

#include "gcrystal/crystal.hpp"
#include "gcrystal/errors.hpp"

namespace gcrystal {

/// Index j of the simple transposition s_j, 1 <= j <= m-1.
struct TranspositionIndex {
  int j;
  /// Throws std::out_of_range unless 1 <= j <= m-1.
  static TranspositionIndex checked(int j, int m);
};

/// kappa_r(x, y) = sum_{s=0}^{n-1} prod_{t=1}^{s} y^{(r+t)} prod_{t=s+1}^{n-1} x^{(r+t)}.
Rational kappa(const FactorPoint& x, const FactorPoint& y, long long r);

/// Birational R-matrix on factors j, j+1; other factors are untouched.
/// Throws PoleError if some kappa_r(x_j, x_{j+1}) vanishes.
ProductPoint apply_s(TranspositionIndex j, const ProductPoint& x);

class WordPoleError : public PoleError {
 public:
  WordPoleError(std::size_t position, const PoleError& cause);
  /// 0-based position in the word of the failing letter.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Left-to-right composition: apply word[0] first.
ProductPoint apply_word(std::span<const int> word, const ProductPoint& x);

/// One reduced word for each element of S_m (m! words, identity first),
/// produced by breadth-first search over right multiplication by s_j.
std::vector<std::vector<int>> reduced_words(int m);

}  // namespace gcrystal
