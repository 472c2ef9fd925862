#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agscale {

/// Argument outside the mathematical domain of an operation (e.g. zeta at s <= 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real-number enclosure became too wide to certify the next digit.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(const std::string& what, std::size_t certain_prefix)
      : std::runtime_error(what), certain_prefix_(certain_prefix) {}

  /// Number of leading digits that were certified before the enclosure failed.
  std::size_t certain_prefix() const noexcept { return certain_prefix_; }

 private:
  std::size_t certain_prefix_;
};

/// Word enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int max_admissible)
      : std::runtime_error(what), max_admissible_(max_admissible) {}

  /// Largest admissible value of the parameter that overflowed the budget
  /// (depth for partition sums, 0 when no value is admissible).
  int max_admissible() const noexcept { return max_admissible_; }

 private:
  int max_admissible_;
};

/// Iterative solver stopped without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

/// Root bracketing failed inside the search window.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested scaling exponent lies outside the range reachable at the working
/// alphabet and precision.
class UnreachableAlpha : public std::runtime_error {
 public:
  UnreachableAlpha(const std::string& what, double alpha_min, double alpha_max)
      : std::runtime_error(what), alpha_min_(alpha_min), alpha_max_(alpha_max) {}

  double alpha_min() const noexcept { return alpha_min_; }
  double alpha_max() const noexcept { return alpha_max_; }

 private:
  double alpha_min_;
  double alpha_max_;
};

}  // namespace agscale
