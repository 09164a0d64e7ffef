#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gcrystal/crystal.hpp"
#include "gcrystal/errors.hpp"

namespace gcrystal {

enum class AxiomOutcome { kPass, kFail, kPole, kNotApplicable };

std::string to_string(AxiomOutcome o);

struct AxiomCheck {
  int axiom;  // 1..5
  int i;
  int j;
  AxiomOutcome outcome;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  std::vector<AxiomCheck> failures() const;
  int count(AxiomOutcome o) const;
};

/// Runs the geometric crystal axioms on any model exposing
///
///   using Point, Scalar;
///   int n() const;
///   CrystalStats<Scalar> stats(const Point&, int k) const;
///   Point act(const Point&, int k, const Scalar& c) const;
///   bool same_value(const Scalar&, const Scalar&, int axiom) const;
///   bool same_point(const Point&, const Point&, int axiom) const;
///   Scalar power(const Scalar&, int) const;
///
/// Axiom (1) is checked pointwise: e_i^1 is defined at x. Poles (PoleError,
/// DivisionByZero, NonConvergence) are reported, never thrown.
template <class Model>
AxiomReport check_axioms_with(const Model& model, const typename Model::Point& x,
                              const typename Model::Scalar& c, const typename Model::Scalar& c2) {
  using Scalar = typename Model::Scalar;
  const CartanData cartan(model.n());
  const int n = model.n();
  AxiomReport report;

  auto guarded = [&](int axiom, int i, int j, auto&& predicate) {
    AxiomOutcome o;
    try {
      o = predicate() ? AxiomOutcome::kPass : AxiomOutcome::kFail;
    } catch (const PoleError&) {
      o = AxiomOutcome::kPole;
    } catch (const DivisionByZero&) {
      o = AxiomOutcome::kPole;
    } catch (const NonConvergence&) {
      o = AxiomOutcome::kPole;
    }
    report.checks.push_back({axiom, i, j, o});
  };

  for (int i = 1; i <= n; ++i) {
    guarded(1, i, i, [&] {
      (void)model.act(x, i, Scalar(1));
      return true;
    });
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int a = cartan(i, j);
      guarded(2, i, j, [&] {
        const auto before = model.stats(x, j);
        const auto after = model.stats(model.act(x, i, c), j);
        return model.same_value(after.gamma, model.power(c, a) * before.gamma, 2);
      });
      if (i == j) {
        guarded(3, i, j, [&] {
          const auto before = model.stats(x, i);
          const auto after = model.stats(model.act(x, i, c), i);
          return model.same_value(after.eps, before.eps / c, 3);
        });
        continue;
      }
      if (a == 0) {
        guarded(4, i, j, [&] {
          return model.same_point(model.act(model.act(x, j, c2), i, c),
                                  model.act(model.act(x, i, c), j, c2), 4);
        });
      } else {
        report.checks.push_back({4, i, j, AxiomOutcome::kNotApplicable});
      }
      if (a == -1) {
        guarded(5, i, j, [&] {
          const Scalar cc = c * c2;
          const auto lhs = model.act(model.act(model.act(x, i, c2), j, cc), i, c);
          const auto rhs = model.act(model.act(model.act(x, j, c), i, cc), j, c2);
          return model.same_point(lhs, rhs, 5);
        });
      } else {
        report.checks.push_back({5, i, j, AxiomOutcome::kNotApplicable});
      }
    }
  }
  return report;
}

/// The product crystal X_M^m with exact comparisons.
struct ProductCrystalModel {
  using Point = ProductPoint;
  using Scalar = Rational;

  int n_;
  int n() const { return n_; }
  Stats stats(const Point& x, int k) const { return product_stats(x, k); }
  Point act(const Point& x, int k, const Scalar& c) const { return product_e(x, k, c); }
  bool same_value(const Scalar& a, const Scalar& b, int) const { return a == b; }
  bool same_point(const Point& a, const Point& b, int) const { return a == b; }
  Scalar power(const Scalar& c, int e) const { return c.pow(e); }
};

/// Axioms (1)-(5) for the product crystal at (x, c, c').
AxiomReport check_axioms(const ProductPoint& x, const Rational& c, const Rational& c2);

}  // namespace gcrystal
