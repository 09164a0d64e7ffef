#include "gcrystal/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gcrystal/errors.hpp"

namespace gcrystal {

WindowMatrix::WindowMatrix(int n, int width)
    : n_(n),
      width_(width),
      diagonals_(static_cast<std::size_t>(width + 1), std::vector<double>(static_cast<std::size_t>(n), 0.0)) {
  if (n < 1 || width < 1) throw std::invalid_argument("window needs n >= 1 and width >= 1");
  std::fill(diagonals_[0].begin(), diagonals_[0].end(), 1.0);
}

double WindowMatrix::at(long long i, long long j) const {
  const long long d = j - i;
  if (d < 0) return 0.0;
  if (d > width_) {
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside window");
  }
  return diagonals_[static_cast<std::size_t>(d)][static_cast<std::size_t>(residue(i, n_) - 1)];
}

void WindowMatrix::set(int d, long long row, double value) {
  if (d == 0) throw std::invalid_argument("main diagonal is fixed to 1");
  diagonals_.at(static_cast<std::size_t>(d))[static_cast<std::size_t>(residue(row, n_) - 1)] = value;
}

void WhirlStream::validate() const {
  if (a.empty()) throw std::invalid_argument("stream needs at least one color");
  for (double v : a) {
    if (!(v > 0.0)) throw std::invalid_argument("stream parameters a must be positive");
  }
  if (!(q >= 0.0 && q < 1.0)) throw std::invalid_argument("stream decay q must lie in [0, 1)");
  if (!curl.empty() && curl.size() != a.size()) throw DimensionMismatch("curl parameters must have length n");
  for (double v : curl) {
    if (!(v > 0.0)) throw std::invalid_argument("curl parameters must be positive");
  }
}

std::vector<double> WhirlStream::factor(int i) const {
  const double scale = std::pow(q, i - 1);
  std::vector<double> out(a.size());
  std::transform(a.begin(), a.end(), out.begin(), [scale](double v) { return v * scale; });
  return out;
}

WindowMatrix truncated_product(const WhirlStream& stream, int factors, int width) {
  stream.validate();
  if (factors < 1) throw std::invalid_argument("truncated_product needs at least one factor");
  const int n = stream.n();
  WindowMatrix y(n, width);
  if (!stream.curl.empty()) {
    for (int d = 1; d <= width; ++d) {
      for (int i = 1; i <= n; ++i) {
        y.set(d, i, y.at(i, i + d - 1) * stream.curl[static_cast<std::size_t>(residue(i + d - 1, n) - 1)]);
      }
    }
  }
  for (int f = 1; f <= factors; ++f) {
    const std::vector<double> x = stream.factor(f);
    // Y M(x): column j gains x^{(j-1)} times column j-1; walk offsets
    // downward so column j-1 is still the old one when read.
    for (int d = width; d >= 1; --d) {
      for (int i = 1; i <= n; ++i) {
        const double v = y.at(i, i + d) + y.at(i, i + d - 1) * x[static_cast<std::size_t>(residue(i + d - 1, n) - 1)];
        y.set(d, i, v);
      }
    }
  }
  for (int d = 0; d <= width; ++d) {
    for (double v : y.diagonal(d)) {
      if (!std::isfinite(v)) throw OverflowError("window entry overflowed at offset " + std::to_string(d));
    }
  }
  return y;
}

WindowMatrix left_chevalley(const WindowMatrix& y, long long k, double a) {
  WindowMatrix out = y;
  for (int d = 1; d <= y.width(); ++d) out.set(d, k, y.at(k, k + d) + a * y.at(k + 1, k + d));
  return out;
}

WindowMatrix right_chevalley(const WindowMatrix& y, long long k, double a) {
  WindowMatrix out = y;
  const int n = y.n();
  for (int d = 1; d <= y.width(); ++d) {
    for (int i = 1; i <= n; ++i) {
      if (residue(i + d, n) != residue(k + 1, n)) continue;
      out.set(d, i, y.at(i, i + d) + a * y.at(i, i + d - 1));
    }
  }
  return out;
}

namespace {

double checked_ratio(double num, double den, const char* what, long long i, long long j) {
  if (den == 0.0) {
    throw DivisionByZero(std::string(what) + ": zero entry y_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  return num / den;
}

bool settled(const std::vector<double>& s, double tol) {
  if (s.size() < 4) return false;
  for (std::size_t t = s.size() - 3; t < s.size(); ++t) {
    if (!relative_close(s[t], s[t - 1], tol)) return false;
  }
  return true;
}

}  // namespace

bool relative_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

LimitEstimate limit_ratios(const WindowMatrix& y, long long k, double tol) {
  if (y.width() < 8) throw std::invalid_argument("limit_ratios needs window width >= 8");
  LimitEstimate est{};
  for (long long d = 1; d <= y.width(); ++d) {
    est.phi_sequence.push_back(checked_ratio(y.at(k, k + d), y.at(k + 1, k + d), "phi", k + 1, k + d));
  }
  for (long long d = 1; d + 1 <= y.width(); ++d) {
    est.eps_sequence.push_back(checked_ratio(y.at(k - d, k + 1), y.at(k - d, k), "eps", k - d, k));
  }
  est.phi = est.phi_sequence.back();
  est.eps = est.eps_sequence.back();
  est.converged = settled(est.phi_sequence, tol) && settled(est.eps_sequence, tol);
  return est;
}

WindowMatrix asym_e(const WindowMatrix& y, long long k, double c, double tol) {
  if (c == 0.0) throw std::invalid_argument("e_k^c requires c != 0");
  const LimitEstimate est = limit_ratios(y, k, tol);
  if (!est.converged) throw NonConvergence("limit ratios at k = " + std::to_string(k) + " did not converge");
  return right_chevalley(left_chevalley(y, k, (c - 1.0) * est.phi), k, (1.0 / c - 1.0) * est.eps);
}

std::vector<double> update_phi(std::span<const double> phi, long long k, double a) {
  const int n = static_cast<int>(phi.size());
  std::vector<double> out(phi.begin(), phi.end());
  const auto at_k = static_cast<std::size_t>(residue(k, n) - 1);
  const auto below = static_cast<std::size_t>(residue(k - 1, n) - 1);
  if (phi[at_k] == 0.0) throw DivisionByZero("update_phi: phi_k = 0");
  out[below] = phi[below] / (1.0 + a / phi[at_k]);
  out[at_k] = phi[at_k] + a;
  return out;
}

std::vector<double> update_eps(std::span<const double> eps, long long k, double a) {
  const int n = static_cast<int>(eps.size());
  std::vector<double> out(eps.begin(), eps.end());
  const auto at_k = static_cast<std::size_t>(residue(k, n) - 1);
  const auto above = static_cast<std::size_t>(residue(k + 1, n) - 1);
  if (eps[at_k] == 0.0) throw DivisionByZero("update_eps: eps_k = 0");
  out[above] = eps[above] / (1.0 + a / eps[at_k]);
  out[at_k] = eps[at_k] + a;
  return out;
}

CrystalStats<double> AsymptoticCrystalModel::stats(const Point& y, int k) const {
  const LimitEstimate est = limit_ratios(y, k, tol.limit);
  if (!est.converged) throw NonConvergence("limit ratios at k = " + std::to_string(k) + " did not converge");
  if (est.eps == 0.0) throw DivisionByZero("gamma: eps = 0");
  return {est.eps, est.phi, est.phi / est.eps};
}

bool AsymptoticCrystalModel::same_value(double a, double b, int axiom) const {
  return relative_close(a, b, axiom <= 3 ? tol.scalar_axioms : tol.point_axioms);
}

bool AsymptoticCrystalModel::same_point(const Point& a, const Point& b, int axiom) const {
  if (a.n() != b.n() || a.width() != b.width()) return false;
  const double t = axiom <= 3 ? tol.scalar_axioms : tol.point_axioms;
  for (int d = 1; d <= a.width(); ++d) {
    for (std::size_t i = 0; i < a.diagonal(d).size(); ++i) {
      if (!relative_close(a.diagonal(d)[i], b.diagonal(d)[i], t)) return false;
    }
  }
  return true;
}

double AsymptoticCrystalModel::power(double c, int e) const { return std::pow(c, e); }

}  // namespace gcrystal
