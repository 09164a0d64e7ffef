#pragma once

#include <stdexcept>
#include <string>

namespace gcrystal {

/// A birational map was evaluated at one of its poles.
///
/// `denominator()` names the vanishing expression, e.g. "phi_1(x_2)+eps_1(x')"
/// or "kappa_2(x_1,x_2)".
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(std::string denominator)
      : std::runtime_error("pole: " + denominator + " = 0"), denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

/// Arguments with incompatible sizes (different n, wrong arity, ...).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floating point division by an exact zero in the asymptotic estimators.
class DivisionByZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limit-ratio estimates did not settle within the window.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcrystal
