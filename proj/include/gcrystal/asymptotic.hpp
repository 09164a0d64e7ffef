#pragma once

#include <span>
#include <vector>

#include "gcrystal/crystal.hpp"

namespace gcrystal {

/// Finite window onto an element of U: entries y_{i,j} for 0 <= j-i <= width,
/// n-periodic, unit diagonal, in double precision.
class WindowMatrix {
 public:
  /// Identity window.
  WindowMatrix(int n, int width);

  int n() const { return n_; }
  int width() const { return width_; }

  /// y_{i,j}; 0 below the diagonal. Throws std::out_of_range past the window.
  double at(long long i, long long j) const;
  /// Offset-d diagonal by row residue (index residue-1).
  const std::vector<double>& diagonal(int d) const { return diagonals_.at(static_cast<std::size_t>(d)); }
  void set(int d, long long row, double value);

 private:
  int n_;
  int width_;
  std::vector<std::vector<double>> diagonals_;
};

/// Whirl factors x_i^{(s)} = a^{(s)} q^{i-1}, i = 1, 2, ...
///
/// `curl`, when non-empty, prepends the factor M(-b)^{-1} (entries
/// y_{i,i+d} = b^{(i)} b^{(i+1)} ... b^{(i+d-1)}). Infinite whirl products
/// alone have all limit ratios equal to zero; the curl gives an element of
/// U with positive limit ratios.
struct WhirlStream {
  std::vector<double> a;
  double q = 0.5;
  std::vector<double> curl;

  int n() const { return static_cast<int>(a.size()); }
  /// Throws std::invalid_argument on non-positive parameters or q outside [0,1).
  void validate() const;
  std::vector<double> factor(int i) const;
};

/// Window (offsets <= width) of the stream's first `factors` whirls.
/// Throws OverflowError if an entry is not finite.
WindowMatrix truncated_product(const WhirlStream& stream, int factors, int width);

/// u_k(a) Y and Y u_k(a); exact within the window.
WindowMatrix left_chevalley(const WindowMatrix& y, long long k, double a);
WindowMatrix right_chevalley(const WindowMatrix& y, long long k, double a);

struct LimitEstimate {
  double eps;
  double phi;
  bool converged;
  std::vector<double> eps_sequence;
  std::vector<double> phi_sequence;
};

inline constexpr double kDefaultLimitTolerance = 1e-9;

/// phi_k from y_{k,k+d}/y_{k+1,k+d}, eps_k from y_{k-d,k+1}/y_{k-d,k},
/// d = 1, 2, ... up to the window. Converged iff the last three successive
/// relative differences of both sequences are below tol.
/// Throws std::invalid_argument for width < 8, DivisionByZero on an exactly
/// zero denominator entry.
LimitEstimate limit_ratios(const WindowMatrix& y, long long k, double tol = kDefaultLimitTolerance);

/// u_k((c-1) phi_k) Y u_k((c^{-1}-1) eps_k). Throws NonConvergence when the
/// limit ratios at Y are not converged.
WindowMatrix asym_e(const WindowMatrix& y, long long k, double c, double tol = kDefaultLimitTolerance);

/// phi family after left multiplication by u_k(a); phi[s-1] holds phi_s.
std::vector<double> update_phi(std::span<const double> phi, long long k, double a);
/// eps family after right multiplication by u_k(a); eps[s-1] holds eps_s.
std::vector<double> update_eps(std::span<const double> eps, long long k, double a);

/// |a - b| <= tol * max(|a|, |b|).
bool relative_close(double a, double b, double tol);

/// Tolerances used when checking the crystal axioms on windows.
struct AsymptoticTolerances {
  double limit = kDefaultLimitTolerance;
  double scalar_axioms = 1e-8;  // (2), (3)
  double point_axioms = 1e-6;   // (4), (5)
};

/// Adapter for check_axioms_with.
struct AsymptoticCrystalModel {
  using Point = WindowMatrix;
  using Scalar = double;

  int n_;
  AsymptoticTolerances tol;

  int n() const { return n_; }
  CrystalStats<double> stats(const Point& y, int k) const;
  Point act(const Point& y, int k, double c) const { return asym_e(y, k, c, tol.limit); }
  bool same_value(double a, double b, int axiom) const;
  bool same_point(const Point& a, const Point& b, int axiom) const;
  double power(double c, int e) const;
};

}  // namespace gcrystal
