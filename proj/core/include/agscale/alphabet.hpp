#pragma once

// Digit alphabets {q, ..., M} and the result record shared by every pressure
// method.

#include <cstdint>
#include <optional>
#include <string>

namespace agscale {

enum class TailMode {
  /// Digits above `truncation` are dropped; the effect is reported as a bound.
  kTruncate,
  /// Digits above `truncation` are folded in by an Euler-Maclaurin tail, so
  /// the alphabet is effectively {q, q+1, ...}.
  kEulerMaclaurin,
};

struct AlphabetSpec {
  std::int64_t min_digit = 1;      ///< q of I_q; 1 is the full system
  std::int64_t truncation = 1000;  ///< largest explicitly summed digit M
  TailMode tail = TailMode::kEulerMaclaurin;

  /// Throws DomainError unless 1 <= min_digit <= truncation.
  void validate() const;
  /// Number of explicitly summed digits, M - q + 1.
  std::int64_t size() const noexcept { return truncation - min_digit + 1; }
  bool infinite() const noexcept { return tail == TailMode::kEulerMaclaurin; }

  static AlphabetSpec truncated(std::int64_t max_digit, std::int64_t min = 1) {
    return {min, max_digit, TailMode::kTruncate};
  }
  static AlphabetSpec full(std::int64_t explicit_digits = 1000, std::int64_t min = 1) {
    return {min, explicit_digits, TailMode::kEulerMaclaurin};
  }
};

enum class PressureMethod { kInfinite, kZetaClosedForm, kPartitionSum, kTransferOperator };

std::string to_string(PressureMethod method);

struct PressureEstimate {
  /// log of the pressure growth rate; +inf when the pressure diverges.
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  PressureMethod method = PressureMethod::kTransferOperator;
  /// Enumeration depth or collocation degree, 0 when not applicable.
  int depth_or_degree = 0;

  /// Analytic sandwich of the full-system pressure, when t >= 0 applies.
  std::optional<double> analytic_lower;
  std::optional<double> analytic_upper;

  bool finite() const noexcept { return method != PressureMethod::kInfinite; }
};

}  // namespace agscale
