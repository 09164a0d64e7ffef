#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gcrystal/crystal.hpp"
#include "gcrystal/poly.hpp"

namespace gcrystal {

/// Box (row, col) of a Young diagram in English notation, both 1-based.
struct Cell {
  int row;
  int col;

  /// row - col; the negative of the usual convention.
  int content() const { return row - col; }
  int color(long long r, int n) const { return residue(content() + r, n); }

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Skew diagram lambda/mu. Trailing zero parts of lambda are dropped and mu
/// is padded with zeros to the length of lambda.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless both are partitions with mu inside lambda.
  explicit SkewShape(std::vector<int> lambda, std::vector<int> mu = {});

  const std::vector<int>& lambda() const { return lambda_; }
  const std::vector<int>& mu() const { return mu_; }
  int rows() const { return static_cast<int>(lambda_.size()); }
  /// lambda_1, the order of the Jacobi-Trudi matrix.
  int columns() const { return lambda_.empty() ? 0 : lambda_.front(); }

  bool contains(Cell c) const;
  /// Cells in row-major order.
  std::vector<Cell> cells() const;
  int size() const;
  bool empty() const { return size() == 0; }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  std::vector<int> lambda_;
  std::vector<int> mu_;
};

/// Every nonempty skew shape lambda/mu with lambda_1 <= max_part,
/// len(lambda) <= max_rows and |lambda/mu| <= max_size, in a fixed order.
std::vector<SkewShape> skew_shapes_in_box(int max_part, int max_rows, int max_size);

/// Conjugate partition.
std::vector<int> conjugate(std::span<const int> partition);

/// (n-1) * (m-1, m-2, ..., 1); empty for m = 1.
SkewShape dilated_staircase(int n, int m);

/// Loop elementary symmetric function e_r^{(s)}(x_1..x_m). 1 for r = 0,
/// 0 for r < 0 or r > m.
LoopVarPoly loop_e(long long r, long long s, int n, int m);

/// Calls `visit` with each semistandard filling (entries 1..m, rows weakly
/// increasing, columns strictly increasing), listed in SkewShape::cells() order.
void for_each_tableau(const SkewShape& shape, int m, const std::function<void(std::span<const int>)>& visit);

/// Tableau generating function with r-weight prod x_{T(s)}^{(c(s)+r)}.
LoopVarPoly tableaux_schur(const SkewShape& shape, long long r, int n, int m);

/// det(e_{lambda'_i - mu'_j - i + j}^{(r - j + 1 + mu'_j)}) of order lambda_1.
LoopVarPoly jacobi_trudi_schur(const SkewShape& shape, long long r, int n, int m);

/// Energy D_B: the 0-loop Schur function of (n-1) delta_{m-1}.
LoopVarPoly energy(int n, int m);

/// Exact value of the loop Schur function at a point, summing tableaux
/// strip by strip (no polynomial is built).
Rational schur_value(const SkewShape& shape, long long r, const ProductPoint& x);

/// Cells whose north and west neighbours both lie outside the shape.
std::vector<Cell> nw_corners(const SkewShape& shape);
/// Cells whose south and east neighbours both lie outside the shape.
std::vector<Cell> se_corners(const SkewShape& shape);

struct CornerSets {
  std::vector<Cell> nw;  // A: NW corners of color k
  std::vector<Cell> se;  // B: SE corners of color kb
};

CornerSets corner_sets(const SkewShape& shape, long long r, int n, long long k, long long kb);

/// lambda/mu - A - B: NW corners grow mu, SE corners shrink lambda.
/// Throws std::invalid_argument if A and B meet or a cell is not a corner.
SkewShape remove_corners(const SkewShape& shape, std::span<const Cell> nw, std::span<const Cell> se);

/// Value of (e_k^c)^* s^{(r)}_{lambda/mu} at x by the corner-removal sum.
/// Throws PoleError if eps_k / phi_k are undefined at x.
Rational schur_pushforward(const SkewShape& shape, long long r, long long k, const Rational& c,
                           const ProductPoint& x);

}  // namespace gcrystal
