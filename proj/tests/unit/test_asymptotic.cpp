#include <doctest.h>

#include <cmath>

#include "gcrystal/asymptotic.hpp"
#include "gcrystal/axioms.hpp"
#include "gcrystal/errors.hpp"
#include "gcrystal/sampling.hpp"
#include "gcrystal/whirl.hpp"

using namespace gcrystal;

namespace {

/// Exact counterpart of a stream whose parameters are dyadic, so every
/// double factor is exactly representable.
PeriodicBandedMatrix exact_product(const std::vector<Rational>& a, const Rational& q, int factors) {
  PeriodicBandedMatrix y = PeriodicBandedMatrix::identity(static_cast<int>(a.size()));
  Rational scale(1);
  for (int i = 1; i <= factors; ++i) {
    std::vector<Rational> x;
    for (const auto& v : a) x.push_back(v * scale);
    y = multiply(y, whirl(x));
    scale *= q;
  }
  return y;
}

void check_window_matches(const WindowMatrix& w, const PeriodicBandedMatrix& y, double tol) {
  for (int d = 1; d <= w.width(); ++d) {
    for (int i = 1; i <= w.n(); ++i) CHECK(relative_close(w.at(i, i + d), entry(y, i, i + d).to_double(), tol));
  }
}

WhirlStream curled(std::vector<double> a, std::vector<double> b) {
  WhirlStream s;
  s.a = std::move(a);
  s.curl = std::move(b);
  return s;
}

}  // namespace

TEST_SUITE("asymptotic") {

TEST_CASE("window basics") {
  WindowMatrix w(3, 8);
  CHECK(w.at(2, 2) == 1.0);
  CHECK(w.at(5, 4) == 0.0);
  CHECK(w.at(1, 9) == 0.0);
  CHECK_THROWS_AS(w.at(1, 10), std::out_of_range);
  CHECK_THROWS_AS(w.set(0, 1, 2.0), std::invalid_argument);
  w.set(2, 4, 5.0);
  CHECK(w.at(1, 3) == 5.0);
}

TEST_CASE("stream validation") {
  WhirlStream s;
  s.a = {1.0, -1.0};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.a = {1.0, 1.0};
  s.q = 1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.q = 0.5;
  s.curl = {1.0};
  CHECK_THROWS_AS(s.validate(), DimensionMismatch);
  CHECK_THROWS_AS(truncated_product(WhirlStream{{1.0, 1.0}}, 0, 8), std::invalid_argument);
}

TEST_CASE("truncated products agree with exact whirl products") {
  WhirlStream s;
  s.a = {1.0, 2.0, 0.75};
  s.q = 0.5;
  check_window_matches(truncated_product(s, 6, 10), exact_product({1, 2, Rational(3, 4)}, Rational(1, 2), 6), 1e-14);
  check_window_matches(truncated_product(s, 1, 8), whirl(std::vector<Rational>{1, 2, Rational(3, 4)}), 0);
  s.q = 0.0;
  check_window_matches(truncated_product(s, 5, 8), whirl(std::vector<Rational>{1, 2, Rational(3, 4)}), 0);
}

TEST_CASE("curl factor has product entries") {
  WhirlStream s = curled({1.0, 1.0}, {2.0, 3.0});
  s.q = 0.0;
  const WindowMatrix w = truncated_product(s, 1, 8);
  // Curl entries b^{(i)}...b^{(i+d-1)}, then one whirl with x = a = (1, 1):
  // (B M)_{i,i+d} = B_{i,i+d} + B_{i,i+d-1}.
  CHECK(w.at(1, 2) == 2.0 + 1.0);
  CHECK(w.at(1, 3) == 6.0 + 2.0);
  CHECK(w.at(2, 4) == 6.0 + 3.0);
}

TEST_CASE("doubling the number of factors leaves the window unchanged") {
  const WhirlStream s = curled({0.7, 1.3, 1.1}, {1.2, 0.9, 1.5});
  const WindowMatrix a = truncated_product(s, 100, 60);
  const WindowMatrix b = truncated_product(s, 200, 60);
  for (int d = 1; d <= 60; ++d) {
    for (int i = 1; i <= 3; ++i) CHECK(relative_close(a.at(i, i + d), b.at(i, i + d), 1e-12));
  }
}

TEST_CASE("Chevalley multiplication inside the window is exact") {
  WhirlStream s;
  s.a = {1.0, 2.0};
  const PeriodicBandedMatrix exact = exact_product({1, 2}, Rational(1, 2), 5);
  const WindowMatrix w = truncated_product(s, 5, 9);
  check_window_matches(left_chevalley(w, 1, 0.25), multiply(chevalley(1, Rational(1, 4), 2), exact), 1e-14);
  check_window_matches(right_chevalley(w, 2, 0.25), multiply(exact, chevalley(2, Rational(1, 4), 2)), 1e-14);
}

TEST_CASE("limit_ratios preconditions and degenerate windows") {
  WhirlStream s;
  s.a = {1.0, 1.0};
  CHECK_THROWS_AS(limit_ratios(truncated_product(s, 20, 7), 1), std::invalid_argument);
  // A finite product has a finite band: the ratios hit zero entries.
  CHECK_THROWS_AS(limit_ratios(truncated_product(s, 3, 8), 1), DivisionByZero);
  s.q = 0.99;
  CHECK_FALSE(limit_ratios(truncated_product(s, 200, 8), 1).converged);
}

TEST_CASE("pure whirl streams have zero limit ratios") {
  WhirlStream s;
  s.a = {1.3, 0.8, 1.1};
  s.q = 0.5;
  const int factors = 120;
  const LimitEstimate e = limit_ratios(truncated_product(s, factors, 30), 2);
  for (int d = 1; d <= 30; ++d) {
    const double want = 0.8 * std::pow(0.5, d - 1) * (1 - std::pow(0.5, factors - d + 1)) / (1 - std::pow(0.5, d));
    CHECK(relative_close(e.phi_sequence[static_cast<std::size_t>(d - 1)], want, 1e-12));
  }
  CHECK_FALSE(e.converged);
  // Entries y_{k,k+d} scale like 2^{-d(d-1)/2} and underflow well before d = 60.
  s.a = {1.0, 1.0};
  s.q = 0.5;
  CHECK_THROWS_AS(limit_ratios(truncated_product(s, 120, 60), 1), DivisionByZero);
}

TEST_CASE("curled streams converge to the curl parameters") {
  const WhirlStream s = curled({1.0, 1.0, 1.0}, {1.5, 0.5, 2.0});
  const WindowMatrix y = truncated_product(s, 120, 60);
  for (int k = 1; k <= 3; ++k) {
    const LimitEstimate e = limit_ratios(y, k);
    CHECK(e.converged);
    CHECK(relative_close(e.phi, s.curl[static_cast<std::size_t>(k - 1)], 1e-9));
    CHECK(e.eps > 0.0);
  }
}

TEST_CASE("asym_e") {
  const WhirlStream s = curled({0.9, 1.4, 1.2}, {1.1, 0.6, 1.7});
  const WindowMatrix y = truncated_product(s, 120, 60);
  const AsymptoticCrystalModel model{3, {}};
  const WindowMatrix same = asym_e(y, 2, 1.0);
  CHECK(model.same_point(same, y, 5));
  const double c = 1.7;
  const LimitEstimate before = limit_ratios(y, 2);
  const WindowMatrix moved = asym_e(y, 2, c);
  CHECK(relative_close(limit_ratios(moved, 2).eps, before.eps / c, 1e-8));
  CHECK(relative_close(limit_ratios(moved, 3).phi, limit_ratios(y, 3).phi, 1e-8));
  WhirlStream pure;
  pure.a = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(asym_e(truncated_product(pure, 120, 30), 1, 2.0), NonConvergence);
}

TEST_CASE("asymptotic axioms on a curled stream") {
  const WhirlStream s = curled({0.9, 1.4, 1.2, 0.7}, {1.1, 0.6, 1.7, 1.3});
  const AsymptoticCrystalModel model{4, {}};
  const AxiomReport r = check_axioms_with(model, truncated_product(s, 120, 60), 1.3, 0.8);
  CHECK(r.all_passed());
  CHECK(r.count(AxiomOutcome::kPass) > 0);
}

TEST_CASE("update tables") {
  const std::vector<double> phi{1.0, 2.0, 3.0};
  const std::vector<double> want{2.0, 2.0, 1.5};
  CHECK(update_phi(phi, 1, 1.0) == want);
  CHECK(update_phi(phi, 2, 0.0) == phi);
  const std::vector<double> twice = update_phi(update_phi(phi, 3, 0.5), 3, 0.25);
  const std::vector<double> once = update_phi(phi, 3, 0.75);
  for (std::size_t i = 0; i < 3; ++i) CHECK(relative_close(twice[i], once[i], 1e-15));
  const std::vector<double> eps{1.0, 2.0, 3.0};
  const std::vector<double> eps_want{2.0, 1.0, 3.0};
  CHECK(update_eps(eps, 1, 1.0) == eps_want);
  CHECK_THROWS_AS(update_phi(std::vector<double>{0.0, 1.0}, 1, 1.0), DivisionByZero);
}

TEST_CASE("update tables match window recomputation") {
  const WhirlStream s = curled({0.9, 1.4, 1.2}, {1.1, 0.6, 1.7});
  const WindowMatrix y = truncated_product(s, 120, 60);
  std::vector<double> phi, eps;
  for (int k = 1; k <= 3; ++k) {
    const LimitEstimate e = limit_ratios(y, k);
    phi.push_back(e.phi);
    eps.push_back(e.eps);
  }
  Sampler rng(61);
  for (int t = 0; t < 10; ++t) {
    const long k = rng.uniform_int(1, 3);
    const double a = rng.uniform_real(0.01, 2.0);
    const auto phi_want = update_phi(phi, k, a);
    const auto eps_want = update_eps(eps, k, a);
    const WindowMatrix left = left_chevalley(y, k, a);
    const WindowMatrix right = right_chevalley(y, k, a);
    for (int j = 1; j <= 3; ++j) {
      const auto idx = static_cast<std::size_t>(j - 1);
      CHECK(relative_close(limit_ratios(left, j).phi, phi_want[idx], 1e-6));
      CHECK(relative_close(limit_ratios(right, j).eps, eps_want[idx], 1e-6));
      CHECK(relative_close(limit_ratios(left, j).eps, eps[idx], 1e-8));
      CHECK(relative_close(limit_ratios(right, j).phi, phi[idx], 1e-8));
    }
  }
}

}  // TEST_SUITE
