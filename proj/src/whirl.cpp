#include "gcrystal/whirl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gcrystal/errors.hpp"

namespace gcrystal {

PeriodicBandedMatrix PeriodicBandedMatrix::identity(int n) {
  if (n < 1) throw std::invalid_argument("periodic matrix needs n >= 1");
  PeriodicBandedMatrix m;
  m.n_ = n;
  m.diagonals_.assign(1, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
  return m;
}

PeriodicBandedMatrix::PeriodicBandedMatrix(int n, std::vector<std::vector<Rational>> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  if (n < 1) throw std::invalid_argument("periodic matrix needs n >= 1");
  if (diagonals_.empty()) throw std::invalid_argument("periodic matrix needs its main diagonal");
  for (const auto& diag : diagonals_) {
    if (static_cast<int>(diag.size()) != n) throw DimensionMismatch("diagonal length differs from n");
  }
  for (const auto& v : diagonals_.front()) {
    if (v != Rational(1)) throw std::invalid_argument("main diagonal must be all ones");
  }
  trim();
}

void PeriodicBandedMatrix::trim() {
  while (diagonals_.size() > 1 &&
         std::all_of(diagonals_.back().begin(), diagonals_.back().end(),
                     [](const Rational& v) { return v.is_zero(); })) {
    diagonals_.pop_back();
  }
}

PeriodicBandedMatrix whirl(std::span<const Rational> coords) {
  const int n = static_cast<int>(coords.size());
  return PeriodicBandedMatrix(
      n, {std::vector<Rational>(coords.size(), Rational(1)), std::vector<Rational>(coords.begin(), coords.end())});
}

PeriodicBandedMatrix whirl(const FactorPoint& x) { return whirl(x.coords()); }

PeriodicBandedMatrix chevalley(long long k, const Rational& a, int n) {
  std::vector<Rational> super(static_cast<std::size_t>(n), Rational(0));
  super[residue(k, n) - 1] = a;
  return PeriodicBandedMatrix(n, {std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), super});
}

PeriodicBandedMatrix multiply(const PeriodicBandedMatrix& a, const PeriodicBandedMatrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch("multiply: matrices with different n");
  const int n = a.n();
  const int band = a.band() + b.band();
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(band + 1),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
  // (AB)_{i,i+d} = sum_t A_{i,i+t} B_{i+t,i+d}
  for (int d = 0; d <= band; ++d) {
    for (int i = 1; i <= n; ++i) {
      Rational sum(0);
      const int t_lo = std::max(0, d - b.band());
      const int t_hi = std::min(d, a.band());
      for (int t = t_lo; t <= t_hi; ++t) {
        sum += a.diagonal(t)[static_cast<std::size_t>(i - 1)] *
               b.diagonal(d - t)[static_cast<std::size_t>(residue(i + t, n) - 1)];
      }
      out[static_cast<std::size_t>(d)][static_cast<std::size_t>(i - 1)] = std::move(sum);
    }
  }
  return PeriodicBandedMatrix(n, std::move(out));
}

PeriodicBandedMatrix from_factors(const ProductPoint& x) {
  PeriodicBandedMatrix y = whirl(x.factor(1));
  for (int i = 2; i <= x.m(); ++i) y = multiply(y, whirl(x.factor(i)));
  return y;
}

Rational entry(const PeriodicBandedMatrix& y, long long i, long long j) {
  const long long d = j - i;
  if (d < 0 || d > y.band()) return Rational(0);
  return y.diagonal(static_cast<int>(d))[static_cast<std::size_t>(residue(i, y.n()) - 1)];
}

std::vector<std::vector<Rational>> window(const PeriodicBandedMatrix& y, IndexRange rows, IndexRange cols) {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows.size());
  for (long long i = rows.first; i <= rows.last; ++i) {
    std::vector<Rational> row;
    row.reserve(cols.size());
    for (long long j = cols.first; j <= cols.last; ++j) row.push_back(entry(y, i, j));
    out.push_back(std::move(row));
  }
  return out;
}

std::string render_window(const PeriodicBandedMatrix& y, IndexRange rows, IndexRange cols) {
  const auto block = window(y, rows, cols);
  std::size_t width = 1;
  for (long long j = cols.first; j <= cols.last; ++j) width = std::max(width, std::to_string(j).size());
  for (long long i = rows.first; i <= rows.last; ++i) width = std::max(width, std::to_string(i).size());
  for (const auto& row : block) {
    for (const auto& v : row) width = std::max(width, v.str().size());
  }
  auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  std::ostringstream os;
  os << pad("") << " |";
  for (long long j = cols.first; j <= cols.last; ++j) os << ' ' << pad(std::to_string(j));
  os << '\n' << std::string(width, '-') << "-+" << std::string(cols.size() * (width + 1), '-') << '\n';
  for (std::size_t r = 0; r < block.size(); ++r) {
    os << pad(std::to_string(rows.first + static_cast<long long>(r))) << " |";
    for (const auto& v : block[r]) os << ' ' << pad(v.str());
    os << '\n';
  }
  return os.str();
}

}  // namespace gcrystal
