#include "gcrystal/loop_sym.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gcrystal/errors.hpp"

namespace gcrystal {

namespace {

bool is_partition(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

}  // namespace

SkewShape::SkewShape(std::vector<int> lambda, std::vector<int> mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (!is_partition(lambda_) || !is_partition(mu_)) {
    throw std::invalid_argument("skew shape parts must be weakly decreasing and nonnegative");
  }
  while (!lambda_.empty() && lambda_.back() == 0) lambda_.pop_back();
  for (std::size_t i = lambda_.size(); i < mu_.size(); ++i) {
    if (mu_[i] != 0) throw std::invalid_argument("mu is not contained in lambda");
  }
  mu_.resize(lambda_.size(), 0);
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (mu_[i] > lambda_[i]) throw std::invalid_argument("mu is not contained in lambda");
  }
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.row > rows()) return false;
  const auto i = static_cast<std::size_t>(c.row - 1);
  return mu_[i] < c.col && c.col <= lambda_[i];
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    for (int j = mu_[idx] + 1; j <= lambda_[idx]; ++j) out.push_back({i, j});
  }
  return out;
}

int SkewShape::size() const {
  int total = 0;
  for (std::size_t i = 0; i < lambda_.size(); ++i) total += lambda_[i] - mu_[i];
  return total;
}

std::vector<int> conjugate(std::span<const int> partition) {
  std::vector<int> out;
  const int first = partition.empty() ? 0 : partition.front();
  for (int j = 1; j <= first; ++j) {
    out.push_back(static_cast<int>(std::count_if(partition.begin(), partition.end(), [j](int p) { return p >= j; })));
  }
  return out;
}

namespace {

void partitions_in_box(int max_part, int max_rows, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  out.push_back(prefix);
  if (static_cast<int>(prefix.size()) == max_rows) return;
  const int bound = prefix.empty() ? max_part : std::min(max_part, prefix.back());
  for (int p = 1; p <= bound; ++p) {
    prefix.push_back(p);
    partitions_in_box(max_part, max_rows, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SkewShape> skew_shapes_in_box(int max_part, int max_rows, int max_size) {
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  partitions_in_box(max_part, max_rows, prefix, parts);
  std::vector<SkewShape> out;
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) {
      if (mu.size() > lambda.size()) continue;
      bool inside = true;
      int size = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int mi = i < mu.size() ? mu[i] : 0;
        if (mi > lambda[i]) inside = false;
        size += lambda[i] - mi;
      }
      if (inside && size >= 1 && size <= max_size) out.emplace_back(lambda, mu);
    }
  }
  return out;
}

SkewShape dilated_staircase(int n, int m) {
  if (m < 1) throw std::invalid_argument("staircase needs m >= 1");
  std::vector<int> lambda;
  for (int part = m - 1; part >= 1; --part) lambda.push_back((n - 1) * part);
  return SkewShape(std::move(lambda));
}

LoopVarPoly loop_e(long long r, long long s, int n, int m) {
  if (r < 0 || r > m) return LoopVarPoly(0);
  if (r == 0) return LoopVarPoly(1);
  // table[t] = e_t^{(s)}(x_1..x_j) as j grows; the last chosen factor of a
  // t-subset carries color s+t-1.
  std::vector<LoopVarPoly> table(static_cast<std::size_t>(r + 1));
  table[0] = LoopVarPoly(1);
  for (int j = 1; j <= m; ++j) {
    for (long long t = std::min<long long>(r, j); t >= 1; --t) {
      const auto ti = static_cast<std::size_t>(t);
      table[ti] += table[ti - 1] * LoopVarPoly::variable(VarId::of(j, s + t - 1, n));
    }
  }
  return table[static_cast<std::size_t>(r)];
}

void for_each_tableau(const SkewShape& shape, int m, const std::function<void(std::span<const int>)>& visit) {
  const std::vector<Cell> cells = shape.cells();
  std::vector<int> filling(cells.size(), 0);
  // value[row][col] of the cells filled so far.
  std::vector<std::vector<int>> value(static_cast<std::size_t>(shape.rows() + 1),
                                      std::vector<int>(static_cast<std::size_t>(shape.columns() + 1), 0));

  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      visit(filling);
      return;
    }
    const Cell c = cells[idx];
    int lo = 1;
    if (shape.contains({c.row, c.col - 1})) lo = std::max(lo, value[c.row][c.col - 1]);
    if (shape.contains({c.row - 1, c.col})) lo = std::max(lo, value[c.row - 1][c.col] + 1);
    for (int v = lo; v <= m; ++v) {
      value[c.row][c.col] = v;
      filling[idx] = v;
      fill(idx + 1);
    }
    value[c.row][c.col] = 0;
  };
  fill(0);
}

LoopVarPoly tableaux_schur(const SkewShape& shape, long long r, int n, int m) {
  const std::vector<Cell> cells = shape.cells();
  LoopVarPoly out;
  for_each_tableau(shape, m, [&](std::span<const int> filling) {
    Monomial mono;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      mono = mono * Monomial(VarId::of(filling[i], cells[i].content() + r, n));
    }
    out.add_term(mono, Rational(1));
  });
  return out;
}

namespace {

// Laplace expansion along rows, memoized on the set of used columns.
LoopVarPoly determinant(const std::vector<std::vector<LoopVarPoly>>& a) {
  const std::size_t order = a.size();
  if (order == 0) return LoopVarPoly(1);
  if (order > 24) throw std::invalid_argument("determinant order too large");
  std::unordered_map<std::uint32_t, LoopVarPoly> memo;
  const std::uint32_t full = (order == 32) ? ~0U : ((1U << order) - 1U);

  std::function<const LoopVarPoly&(std::uint32_t)> minor = [&](std::uint32_t used) -> const LoopVarPoly& {
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    LoopVarPoly total;
    if (used == full) {
      total = LoopVarPoly(1);
    } else {
      const auto row = static_cast<std::size_t>(__builtin_popcount(used));
      int free_before = 0;
      for (std::size_t col = 0; col < order; ++col) {
        if (used & (1U << col)) continue;
        const LoopVarPoly& entry = a[row][col];
        if (!entry.is_zero()) {
          const LoopVarPoly& sub = minor(used | (1U << col));
          if (!sub.is_zero()) {
            LoopVarPoly term = entry * sub;
            if (free_before % 2 == 0) {
              total += term;
            } else {
              total -= term;
            }
          }
        }
        ++free_before;
      }
    }
    return memo.emplace(used, std::move(total)).first->second;
  };
  return minor(0);
}

}  // namespace

LoopVarPoly jacobi_trudi_schur(const SkewShape& shape, long long r, int n, int m) {
  const std::vector<int> lc = conjugate(shape.lambda());
  std::vector<int> mc = conjugate(shape.mu());
  const std::size_t order = lc.size();
  mc.resize(order, 0);
  std::vector<std::vector<LoopVarPoly>> a(order, std::vector<LoopVarPoly>(order));
  for (std::size_t i = 1; i <= order; ++i) {
    for (std::size_t j = 1; j <= order; ++j) {
      const long long deg = static_cast<long long>(lc[i - 1]) - mc[j - 1] - static_cast<long long>(i) +
                            static_cast<long long>(j);
      const long long color = r - static_cast<long long>(j) + 1 + mc[j - 1];
      a[i - 1][j - 1] = loop_e(deg, color, n, m);
    }
  }
  return determinant(a);
}

LoopVarPoly energy(int n, int m) { return tableaux_schur(dilated_staircase(n, m), 0, n, m); }

Rational schur_value(const SkewShape& shape, long long r, const ProductPoint& x) {
  const int n = x.n();
  const int m = x.m();
  // Scale to integers: X = L x with L the lcm of all denominators; the
  // function is homogeneous of degree |lambda/mu|.
  mpz_class lcm_den = 1;
  for (const auto& f : x.factors()) {
    for (const auto& v : f.coords()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.raw().get_den_mpz_t());
  }
  std::vector<std::vector<mpz_class>> scaled(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    for (const auto& v : x.factor(i).coords()) {
      scaled[static_cast<std::size_t>(i - 1)].push_back(lcm_den / v.raw().get_den() * v.raw().get_num());
    }
  }
  auto var = [&](int factor, long long color) -> const mpz_class& {
    return scaled[static_cast<std::size_t>(factor - 1)][static_cast<std::size_t>(residue(color, n) - 1)];
  };

  const std::vector<int>& lambda = shape.lambda();
  const std::size_t rows = lambda.size();
  // A semistandard filling is a chain mu = nu^0 <= ... <= nu^m = lambda of
  // horizontal strips; nu^t/nu^{t-1} holds the entries equal to t.
  std::map<std::vector<int>, mpz_class> current{{shape.mu(), mpz_class(1)}};
  for (int t = 1; t <= m; ++t) {
    std::map<std::vector<int>, mpz_class> next;
    const bool last = t == m;
    for (const auto& [nu, val] : current) {
      std::vector<int> grown = nu;
      std::function<void(std::size_t, const mpz_class&)> extend = [&](std::size_t a, const mpz_class& w) {
        if (a == rows) {
          next[grown] += w;
          return;
        }
        const int hi = a == 0 ? lambda[0] : std::min(lambda[a], nu[a - 1]);
        const int lo = last ? lambda[a] : nu[a];
        if (lo > hi) return;
        mpz_class weight = w;
        const int row = static_cast<int>(a) + 1;
        for (int b = nu[a] + 1; b < lo; ++b) weight *= var(t, row - b + r);
        for (int len = lo; len <= hi; ++len) {
          if (len > nu[a]) weight *= var(t, row - len + r);
          grown[a] = len;
          extend(a + 1, weight);
        }
        grown[a] = nu[a];
      };
      extend(0, val);
    }
    current = std::move(next);
  }
  auto it = current.find(lambda);
  if (it == current.end()) return Rational(0);
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), lcm_den.get_mpz_t(), static_cast<unsigned long>(shape.size()));
  return Rational(it->second, den);
}

std::vector<Cell> nw_corners(const SkewShape& shape) {
  std::vector<Cell> out;
  for (const Cell& c : shape.cells()) {
    if (!shape.contains({c.row - 1, c.col}) && !shape.contains({c.row, c.col - 1})) out.push_back(c);
  }
  return out;
}

std::vector<Cell> se_corners(const SkewShape& shape) {
  std::vector<Cell> out;
  for (const Cell& c : shape.cells()) {
    if (!shape.contains({c.row + 1, c.col}) && !shape.contains({c.row, c.col + 1})) out.push_back(c);
  }
  return out;
}

CornerSets corner_sets(const SkewShape& shape, long long r, int n, long long k, long long kb) {
  CornerSets out;
  for (const Cell& c : nw_corners(shape)) {
    if (c.color(r, n) == residue(k, n)) out.nw.push_back(c);
  }
  for (const Cell& c : se_corners(shape)) {
    if (c.color(r, n) == residue(kb, n)) out.se.push_back(c);
  }
  return out;
}

SkewShape remove_corners(const SkewShape& shape, std::span<const Cell> nw, std::span<const Cell> se) {
  for (const Cell& a : nw) {
    if (std::find(se.begin(), se.end(), a) != se.end()) {
      throw std::invalid_argument("corner sets to remove must be disjoint");
    }
  }
  const auto nw_all = nw_corners(shape);
  const auto se_all = se_corners(shape);
  std::vector<int> lambda = shape.lambda();
  std::vector<int> mu = shape.mu();
  for (const Cell& a : nw) {
    if (std::find(nw_all.begin(), nw_all.end(), a) == nw_all.end()) {
      throw std::invalid_argument("not a NW corner");
    }
    ++mu[static_cast<std::size_t>(a.row - 1)];
  }
  for (const Cell& b : se) {
    if (std::find(se_all.begin(), se_all.end(), b) == se_all.end()) {
      throw std::invalid_argument("not a SE corner");
    }
    --lambda[static_cast<std::size_t>(b.row - 1)];
  }
  return SkewShape(std::move(lambda), std::move(mu));
}

Rational schur_pushforward(const SkewShape& shape, long long r, long long k, const Rational& c,
                           const ProductPoint& x) {
  if (c.is_zero()) throw std::invalid_argument("e_k^c requires c != 0");
  const Stats stats = product_stats(x, k);
  const CornerSets corners = corner_sets(shape, r, x.n(), k, k + x.m());
  const Rational left = (c - Rational(1)) * stats.phi;
  const Rational right = (c.inverse() - Rational(1)) * stats.eps;

  Rational total(0);
  const std::size_t na = corners.nw.size();
  const std::size_t nb = corners.se.size();
  std::vector<Cell> a_set, b_set;
  for (std::uint32_t amask = 0; amask < (1U << na); ++amask) {
    a_set.clear();
    for (std::size_t i = 0; i < na; ++i) {
      if (amask & (1U << i)) a_set.push_back(corners.nw[i]);
    }
    for (std::uint32_t bmask = 0; bmask < (1U << nb); ++bmask) {
      b_set.clear();
      bool disjoint = true;
      for (std::size_t i = 0; i < nb; ++i) {
        if (!(bmask & (1U << i))) continue;
        if (std::find(a_set.begin(), a_set.end(), corners.se[i]) != a_set.end()) disjoint = false;
        b_set.push_back(corners.se[i]);
      }
      if (!disjoint) continue;
      const SkewShape reduced = remove_corners(shape, a_set, b_set);
      total += right.pow(static_cast<int>(b_set.size())) * left.pow(static_cast<int>(a_set.size())) *
               schur_value(reduced, r, x);
    }
  }
  return total;
}

}  // namespace gcrystal
