#include "agscale/cf_core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "agscale/errors.hpp"
#include "agscale/numerics.hpp"

namespace agscale {

DigitWord::DigitWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw DomainError("digit word must be nonempty");
  for (Digit d : digits_) {
    if (d == 0) throw DomainError("continued-fraction digits must be >= 1");
  }
}

DigitWord::DigitWord(std::initializer_list<Digit> digits)
    : DigitWord(std::vector<Digit>(digits)) {}

DigitWord DigitWord::prefix(std::size_t n) const {
  if (n == 0 || n > digits_.size()) throw DomainError("prefix length out of range");
  return DigitWord(std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<long>(n)));
}

DigitWord constant_word(Digit k, std::size_t n) { return DigitWord(std::vector<Digit>(n, k)); }

DigitWord noble_word(std::span<const Digit> head, std::size_t n) {
  std::vector<Digit> d(head.begin(), head.end());
  if (d.size() < n) d.resize(n, 1);
  return DigitWord(std::move(d));
}

DigitWord increasing_word(std::size_t n) {
  std::vector<Digit> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = i + 1;
  return DigitWord(std::move(d));
}

std::vector<Convergent> convergents(const DigitWord& word) {
  std::vector<Convergent> out;
  out.reserve(word.size());
  BigInt p_prev2 = 1, p_prev = 0;  // p_{-1}, p_0
  BigInt q_prev2 = 0, q_prev = 1;  // q_{-1}, q_0
  for (std::size_t k = 0; k < word.size(); ++k) {
    const BigInt a = word[k];
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    q_prev2 = std::move(q_prev);
    p_prev = p;
    q_prev = q;
    out.push_back({std::move(p), std::move(q), k + 1});
  }
  return out;
}

LogState LogState::advance(Digit digit) const noexcept {
  const double a = static_cast<double>(digit);
  LogState next;
  next.log_q = log_q + std::log(a) + std::log1p(ratio / a);
  next.ratio = 1.0 / (a + ratio);
  return next;
}

std::vector<ScalingTrace> log_q_trace(const DigitWord& word) {
  std::vector<ScalingTrace> out;
  out.reserve(word.size());
  CompensatedSum log_q;
  CompensatedSum sum_log;
  double ratio = 0.0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const double a = static_cast<double>(word[k]);
    const double log_a = std::log(a);
    log_q.add(log_a);
    log_q.add(std::log1p(ratio / a));
    sum_log.add(log_a);
    ratio = 1.0 / (a + ratio);

    ScalingTrace row;
    row.n = k + 1;
    row.sum_log_digits = sum_log.value();
    row.log_q = log_q.value();
    row.q_ratio = ratio;
    // q_n >= 2 unless the word so far is [1].
    row.ratio = (k == 0 && word[0] == 1) ? std::numeric_limits<double>::quiet_NaN()
                                         : row.sum_log_digits / row.log_q;
    out.push_back(row);
  }
  return out;
}

double scaling_ratio(const DigitWord& word) {
  if (word.size() == 1 && word[0] == 1) {
    throw DomainError("scaling ratio undefined for q_n < 2 (the word [1])");
  }
  return log_q_trace(word).back().ratio;
}

CylinderInterval cylinder_interval(const DigitWord& word) {
  const auto conv = convergents(word);
  const Convergent& last = conv.back();
  const BigInt p_prev = conv.size() >= 2 ? conv[conv.size() - 2].p : BigInt(1);
  const BigInt q_prev = conv.size() >= 2 ? conv[conv.size() - 2].q : BigInt(0);
  Rational a(last.p, last.q);
  Rational b(last.p + p_prev, last.q + q_prev);
  if (a < b) return {a, b};
  return {b, a};
}

Rational cylinder_diameter(const DigitWord& word) {
  const auto conv = convergents(word);
  const BigInt& q = conv.back().q;
  const BigInt q_prev = conv.size() >= 2 ? conv[conv.size() - 2].q : BigInt(1);
  return Rational(BigInt(1), q * (q + q_prev));
}

BigInt digit_product(const DigitWord& word) {
  BigInt prod = 1;
  for (Digit d : word.digits()) prod *= d;
  return prod;
}

Rational refined_denominator_bound(const DigitWord& word) {
  Rational bound{BigInt(word[0])};
  for (std::size_t i = 1; i < word.size(); ++i) {
    // a_i (1 + 1/(a_i (a_{i-1} + 1))) = (a_i (a_{i-1} + 1) + 1) / (a_{i-1} + 1)
    const BigInt prev_plus_one = BigInt(word[i - 1]) + 1;
    bound *= Rational(BigInt(word[i]) * prev_plus_one + 1, prev_plus_one);
  }
  return bound;
}

double restricted_scaling_floor(Digit q) {
  const double qd = static_cast<double>(q);
  return 1.0 - 1.0 / (qd * qd * std::log(qd));
}

double alpha_of_k(Digit k) {
  if (k == 0) throw DomainError("alpha_of_k requires k >= 1");
  const double kd = static_cast<double>(k);
  // -log(-k/2 + sqrt(k^2/4 + 1)) = log(k/2 + sqrt(k^2/4 + 1)) = asinh(k/2)
  return std::log(kd) / std::asinh(0.5 * kd);
}

RealEnclosure enclose_surd(std::int64_t radicand, std::int64_t offset, std::int64_t denominator,
                           unsigned bits) {
  if (radicand < 0) throw DomainError("surd radicand must be nonnegative");
  if (denominator <= 0) throw DomainError("surd denominator must be positive");
  const BigInt scale = BigInt(1) << bits;
  const BigInt scaled = BigInt(radicand) * scale * scale;
  const BigInt root = boost::multiprecision::sqrt(scaled);
  const bool exact = root * root == scaled;
  Rational lo(root, scale);
  Rational hi = exact ? lo : Rational(root + 1, scale);
  lo = (lo + offset) / denominator;
  hi = (hi + offset) / denominator;
  return {lo, hi};
}

namespace {

BigInt floor_positive(const Rational& x) {
  return boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
}

}  // namespace

Expansion expand_real(const RealEnclosure& x, std::size_t n) {
  if (x.lo > x.hi) throw DomainError("enclosure has lo > hi");
  if (x.lo <= 0 && x.is_exact()) throw DomainError("number must lie in (0, 1)");
  if (x.hi >= 1 || x.hi <= 0) throw DomainError("number must lie in (0, 1)");

  Expansion out;
  out.digits.reserve(n);
  Rational lo = x.lo;
  Rational hi = x.hi;
  const bool exact = x.is_exact();

  while (out.digits.size() < n) {
    if (exact) {
      const Rational inv = 1 / lo;
      const BigInt a = floor_positive(inv);
      out.digits.push_back(a.convert_to<Digit>());
      lo = hi = inv - a;
      if (lo == 0) {
        out.terminated = true;
        break;
      }
      continue;
    }
    const std::size_t certain = out.digits.size();
    if (lo <= 0) {
      throw PrecisionExhausted(
          "enclosure reaches 0 after " + std::to_string(certain) + " certain digits", certain);
    }
    const Rational inv_hi = 1 / hi;  // smallest value of 1/x
    const Rational inv_lo = 1 / lo;  // largest value of 1/x
    const BigInt a = floor_positive(inv_hi);
    if (inv_lo >= a + 1) {
      throw PrecisionExhausted("enclosure straddles a digit boundary after " +
                                   std::to_string(certain) + " certain digits",
                               certain);
    }
    out.digits.push_back(a.convert_to<Digit>());
    lo = inv_hi - a;
    hi = inv_lo - a;
  }
  return out;
}

}  // namespace agscale
