#include "gcrystal/axioms.hpp"

#include <algorithm>

namespace gcrystal {

std::string to_string(AxiomOutcome o) {
  switch (o) {
    case AxiomOutcome::kPass:
      return "pass";
    case AxiomOutcome::kFail:
      return "fail";
    case AxiomOutcome::kPole:
      return "pole";
    case AxiomOutcome::kNotApplicable:
      return "n/a";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const AxiomCheck& c) {
    return c.outcome == AxiomOutcome::kFail || c.outcome == AxiomOutcome::kPole;
  });
}

std::vector<AxiomCheck> AxiomReport::failures() const {
  std::vector<AxiomCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const AxiomCheck& c) {
    return c.outcome == AxiomOutcome::kFail || c.outcome == AxiomOutcome::kPole;
  });
  return out;
}

int AxiomReport::count(AxiomOutcome o) const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [o](const AxiomCheck& c) { return c.outcome == o; }));
}

AxiomReport check_axioms(const ProductPoint& x, const Rational& c, const Rational& c2) {
  return check_axioms_with(ProductCrystalModel{x.n()}, x, c, c2);
}

}  // namespace gcrystal
