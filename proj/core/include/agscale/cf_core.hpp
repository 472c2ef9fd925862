#pragma once

// Regular continued fractions: digit words, exact convergents, cylinder
// geometry, overflow-free denominator logarithms and the digit-scaling ratio
// sum(log a_i) / log q_n.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace agscale {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Digit = std::uint64_t;

/// Finite, nonempty word of continued-fraction digits, each >= 1.
class DigitWord {
 public:
  /// Throws DomainError when empty or when a digit is zero.
  explicit DigitWord(std::vector<Digit> digits);
  DigitWord(std::initializer_list<Digit> digits);

  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const noexcept { return digits_[i]; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  /// First n digits; n must lie in [1, size()].
  DigitWord prefix(std::size_t n) const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;

 private:
  std::vector<Digit> digits_;
};

/// The word (k, k, ..., k) of length n.
DigitWord constant_word(Digit k, std::size_t n);
/// `head` followed by ones up to total length n (a noble number's prefix).
DigitWord noble_word(std::span<const Digit> head, std::size_t n);
/// Digits 1, 2, ..., n (digits tending to infinity).
DigitWord increasing_word(std::size_t n);

/// n-th convergent p_n / q_n of a digit word, in lowest terms.
struct Convergent {
  BigInt p;
  BigInt q;
  std::size_t index = 0;
};

/// Convergents k = 1..n. Satisfies q_k = a_k q_{k-1} + q_{k-2} and
/// p_{k-1} q_k - p_k q_{k-1} = (-1)^k.
std::vector<Convergent> convergents(const DigitWord& word);

/// Overflow-free carrier of the denominator recursion.
struct LogState {
  double log_q = 0.0;  ///< natural log of q_n (q_0 = 1)
  double ratio = 0.0;  ///< q_{n-1} / q_n, in (0, 1] for n >= 1

  /// State after appending one digit:
  /// log q_n = log a_n + log q_{n-1} + log(1 + ratio_{n-1} / a_n).
  LogState advance(Digit digit) const noexcept;
};

/// Per-prefix record of the arithmetic (sum of log digits) versus geometric
/// (log q_n) growth.
struct ScalingTrace {
  std::size_t n = 0;
  double sum_log_digits = 0.0;
  double log_q = 0.0;
  /// sum_log_digits / log_q; NaN when q_n < 2.
  double ratio = 0.0;
  /// q_{n-1} / q_n.
  double q_ratio = 0.0;
};

std::vector<ScalingTrace> log_q_trace(const DigitWord& word);

/// sum(log a_i) / log q_n. Throws DomainError when q_n < 2 (the word [1]).
double scaling_ratio(const DigitWord& word);

/// Endpoints of the cylinder of points whose expansion starts with `word`:
/// p_n/q_n and (p_n + p_{n-1}) / (q_n + q_{n-1}), returned in increasing order.
struct CylinderInterval {
  Rational left;
  Rational right;
};
CylinderInterval cylinder_interval(const DigitWord& word);

/// Exact length 1 / (q_n (q_n + q_{n-1})) of the cylinder of `word`.
Rational cylinder_diameter(const DigitWord& word);

/// Product of the digits.
BigInt digit_product(const DigitWord& word);

/// a_1 * prod_{i>=2} a_i (1 + 1 / (a_i (a_{i-1} + 1))), a rational lower bound for q_n.
Rational refined_denominator_bound(const DigitWord& word);

/// 1 - 1 / (q^2 log q): lower bound for the scaling ratio of any word whose
/// digits are all >= q (q >= 3).
double restricted_scaling_floor(Digit q);

/// log k / asinh(k / 2): the scaling exponent of the periodic expansion (k, k, ...).
/// Equal to log k / -log(-k/2 + sqrt(k^2/4 + 1)), evaluated without cancellation.
double alpha_of_k(Digit k);

/// Closed interval [lo, hi] of rationals containing a real number x in (0, 1).
/// lo == hi marks an exactly known (rational) value.
struct RealEnclosure {
  Rational lo;
  Rational hi;

  static RealEnclosure exact(const Rational& x) { return {x, x}; }
  bool is_exact() const { return lo == hi; }
};

/// Enclosure of (sqrt(radicand) + offset) / denominator of width at most
/// 2^-bits / denominator. Exact when radicand is a perfect square.
RealEnclosure enclose_surd(std::int64_t radicand, std::int64_t offset, std::int64_t denominator,
                           unsigned bits);

/// Regular continued-fraction digits of a real number in (0, 1).
struct Expansion {
  std::vector<Digit> digits;
  /// The number is rational and its (finite) expansion ended before n digits.
  bool terminated = false;
};

/// First n digits of the enclosed number by iterating x -> 1/x - floor(1/x)
/// on both enclosure endpoints. Throws PrecisionExhausted (carrying the number
/// of certain digits) as soon as the enclosure straddles a digit boundary, and
/// DomainError when the enclosure is not inside (0, 1).
Expansion expand_real(const RealEnclosure& x, std::size_t n);

}  // namespace agscale
