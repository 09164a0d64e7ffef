#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcrystal/crystal.hpp"
#include "gcrystal/rational.hpp"

namespace gcrystal {

/// An n-periodic, unipotent, upper-triangular Z x Z matrix supported on
/// diagonals 0..band.
///
/// Stored by diagonals: diagonal(d)[i-1] is the entry y_{i,i+d} for row
/// residue i in 1..n. Periodicity and the zero pattern outside 0..band are
/// structural; trailing zero diagonals are trimmed so band() is canonical.
class PeriodicBandedMatrix {
 public:
  static PeriodicBandedMatrix identity(int n);
  /// diagonals[0] must be all ones and every diagonal must have length n.
  PeriodicBandedMatrix(int n, std::vector<std::vector<Rational>> diagonals);

  int n() const { return n_; }
  int band() const { return static_cast<int>(diagonals_.size()) - 1; }
  /// Offset-d diagonal by row residue; d outside 0..band throws.
  const std::vector<Rational>& diagonal(int d) const { return diagonals_.at(static_cast<std::size_t>(d)); }

  friend bool operator==(const PeriodicBandedMatrix&, const PeriodicBandedMatrix&) = default;

 private:
  PeriodicBandedMatrix() = default;
  void trim();

  int n_ = 0;
  std::vector<std::vector<Rational>> diagonals_;
};

/// Whirl M(x): x^{(i)} at (i, i+1). Coordinates may be zero.
PeriodicBandedMatrix whirl(std::span<const Rational> coords);
PeriodicBandedMatrix whirl(const FactorPoint& x);

/// Chevalley generator u_k(a): a at (i, i+1) for i = k mod n only.
PeriodicBandedMatrix chevalley(long long k, const Rational& a, int n);

/// Matrix product; throws DimensionMismatch on different n.
PeriodicBandedMatrix multiply(const PeriodicBandedMatrix& a, const PeriodicBandedMatrix& b);

/// M(x_1) M(x_2) ... M(x_m).
PeriodicBandedMatrix from_factors(const ProductPoint& x);

/// Entry (i, j) for arbitrary integers, by residue reduction.
Rational entry(const PeriodicBandedMatrix& y, long long i, long long j);

struct IndexRange {
  long long first;
  long long last;  // inclusive
  std::size_t size() const { return last < first ? 0 : static_cast<std::size_t>(last - first + 1); }
};

/// Dense rows x cols block of entries.
std::vector<std::vector<Rational>> window(const PeriodicBandedMatrix& y, IndexRange rows, IndexRange cols);

/// Plain-text rendering of a window, rows and columns labelled by absolute index.
std::string render_window(const PeriodicBandedMatrix& y, IndexRange rows, IndexRange cols);

}  // namespace gcrystal
