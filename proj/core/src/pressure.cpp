#include "agscale/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "agscale/errors.hpp"
#include "agscale/numerics.hpp"
#include "agscale/special_functions.hpp"
#include "agscale/transfer_operator.hpp"

namespace agscale {

void AlphabetSpec::validate() const {
  if (min_digit < 1) throw DomainError("alphabet min_digit must be >= 1");
  if (truncation < min_digit) throw DomainError("alphabet truncation must be >= min_digit");
}

std::string to_string(PressureMethod method) {
  switch (method) {
    case PressureMethod::kInfinite: return "infinite";
    case PressureMethod::kZetaClosedForm: return "zeta";
    case PressureMethod::kPartitionSum: return "partition-sum";
    case PressureMethod::kTransferOperator: return "operator";
  }
  return "unknown";
}

bool is_finite(double t, double beta) noexcept { return 2.0 * (t + beta) > 1.0; }

namespace {

struct Frame {
  double log_q = 0.0;        // log q_{n-1}
  double ratio = 0.0;        // q_{n-2} / q_{n-1}
  double log_digits = 0.0;   // sum of log a_i so far
  std::int64_t next = 0;     // next digit to try at this level
};

}  // namespace

double partition_sum(const PressureQuery& query) {
  query.alphabet.validate();
  if (query.depth < 1) throw DomainError("depth must be >= 1");
  if (!std::isfinite(query.t) || !std::isfinite(query.beta)) {
    throw DomainError("t and beta must be finite");
  }
  const std::int64_t q = query.alphabet.min_digit;
  const std::int64_t m = query.alphabet.truncation;
  const double k = static_cast<double>(query.alphabet.size());
  if (k > 1.0 && query.depth * std::log(k) > std::log(query.max_words) + 1e-12) {
    const int max_depth = static_cast<int>(std::floor(std::log(query.max_words) / std::log(k) + 1e-12));
    throw BudgetExceeded("partition sum over " + std::to_string(query.alphabet.size()) +
                             " digits at depth " + std::to_string(query.depth) +
                             " exceeds the word budget; max admissible depth " +
                             std::to_string(max_depth),
                         max_depth);
  }

  const double t = query.t;
  const double beta = query.beta;
  // sup over the cylinder of -2t log(q_n + y q_{n-1}), y in [0, 1]:
  // y = 0 when t >= 0, y = 1 otherwise; q_n + y q_{n-1} = q_{n-1}(a + ratio + y).
  const double y = t >= 0.0 ? 0.0 : 1.0;

  std::vector<double> log_a(static_cast<std::size_t>(m - q + 1));
  for (std::int64_t a = q; a <= m; ++a) log_a[static_cast<std::size_t>(a - q)] = std::log(static_cast<double>(a));

  LogSumExp total;
  std::vector<double> leaf(log_a.size());
  std::vector<Frame> stack(static_cast<std::size_t>(query.depth));
  stack[0] = Frame{0.0, 0.0, 0.0, q};
  int level = 0;
  while (level >= 0) {
    Frame& frame = stack[static_cast<std::size_t>(level)];
    if (level == query.depth - 1) {
      // innermost digit: one pass for the local maximum, one for the sum
      double top = -kInfinity;
      for (std::size_t i = 0; i < log_a.size(); ++i) {
        const double a = static_cast<double>(q) + static_cast<double>(i);
        leaf[i] = -2.0 * beta * log_a[i] - 2.0 * t * std::log(a + frame.ratio + y);
        top = std::max(top, leaf[i]);
      }
      double acc = 0.0;
      for (double v : leaf) acc += std::exp(v - top);
      total.add(top + std::log(acc) - 2.0 * beta * frame.log_digits - 2.0 * t * frame.log_q);
      --level;
      continue;
    }
    if (frame.next > m) {
      --level;
      continue;
    }
    const std::int64_t a = frame.next++;
    const double ad = static_cast<double>(a);
    Frame& child = stack[static_cast<std::size_t>(level) + 1];
    child.log_q = frame.log_q + std::log(ad + frame.ratio);
    child.ratio = 1.0 / (ad + frame.ratio);
    child.log_digits = frame.log_digits + log_a[static_cast<std::size_t>(a - q)];
    child.next = q;
    ++level;
  }
  return total.value();
}

AnalyticBounds analytic_bounds(double t, double beta, std::int64_t cutoff) {
  if (t < 0.0) throw DomainError("analytic pressure bounds hold only for t >= 0");
  if (!is_finite(t, beta)) throw DomainError("analytic bounds need 2(t + beta) > 1");
  if (cutoff < 2) throw DomainError("cutoff must be >= 2");
  const double s = 2.0 * (t + beta);
  const double kk = static_cast<double>(cutoff);

  // lower: sum_k (k+1)^{-2t} k^{-2 beta}; for k > K each term is at least
  // c (k+1)^{-s}, c = 1 for beta >= 0 and ((K+1)/(K+2))^{-2 beta} otherwise.
  AnalyticBounds out;
  LogSumExp lower;
  for (std::int64_t k = cutoff; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    lower.add(-2.0 * t * std::log1p(kd) - 2.0 * beta * std::log(kd));
  }
  double log_tail = (1.0 - s) * std::log(kk + 2.0) - std::log(s - 1.0);
  if (beta < 0.0) log_tail += -2.0 * beta * std::log((kk + 1.0) / (kk + 2.0));
  out.lower_tail = std::exp(log_tail);
  lower.add(log_tail);
  out.lower = lower.value();

  // upper: the (k, l) sum with the factor (1 + 1/(k(l+1)))^{-2t} <= 1 dropped
  // outside the square, i.e. tail <= zeta(s)^2 - H_K(s)^2 = T (2 H_K + T).
  std::vector<double> log_k(static_cast<std::size_t>(cutoff) + 1);
  CompensatedSum harmonic;
  for (std::int64_t k = cutoff; k >= 1; --k) {
    log_k[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k));
    harmonic.add(std::exp(-s * log_k[static_cast<std::size_t>(k)]));
  }
  CompensatedSum square;
  for (std::int64_t k = cutoff; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const double lk = log_k[static_cast<std::size_t>(k)];
    double row = 0.0;
    for (std::int64_t l = cutoff; l >= 1; --l) {
      const double ld = static_cast<double>(l);
      row += std::exp(-s * (lk + log_k[static_cast<std::size_t>(l)]) -
                      2.0 * t * std::log1p(1.0 / (kd * (ld + 1.0))));
    }
    square.add(row);
  }
  const TailBoundedValue tail = zeta_tail(s, kk + 1.0);
  const double tail_hi = tail.value + tail.tail_bound;
  out.upper_tail = tail_hi * (2.0 * harmonic.value() + tail_hi);
  out.upper = 0.5 * std::log(square.value() + out.upper_tail);
  return out;
}

namespace {

PressureEstimate infinite_marker() {
  PressureEstimate out;
  out.value = out.lower = out.upper = kInfinity;
  out.method = PressureMethod::kInfinite;
  return out;
}

// t = 0: Z_n = (sum_a a^{-2 beta})^n exactly.
PressureEstimate zeta_slice(double beta, const AlphabetSpec& alphabet) {
  const double s = 2.0 * beta;
  LogSumExp partial;
  for (std::int64_t a = alphabet.truncation; a >= alphabet.min_digit; --a) {
    partial.add(-s * std::log(static_cast<double>(a)));
  }
  const double m = static_cast<double>(alphabet.truncation);
  PressureEstimate out;
  out.method = PressureMethod::kZetaClosedForm;
  if (alphabet.infinite()) {
    const TailBoundedValue tail = zeta_tail(s, m + 1.0);
    const double head = std::exp(partial.value());
    out.value = std::log(head + tail.value);
    out.lower = std::log(head + tail.value - tail.tail_bound);
    out.upper = std::log(head + tail.value + tail.tail_bound);
    // rounding in the head sum
    out.lower -= 4.0 * std::numeric_limits<double>::epsilon() * alphabet.size();
    out.upper += 4.0 * std::numeric_limits<double>::epsilon() * alphabet.size();
    return out;
  }
  out.value = out.lower = partial.value();
  if (s <= 1.0) {
    out.upper = kInfinity;
  } else {
    LogSumExp upper = partial;
    upper.add((1.0 - s) * std::log(m) - std::log(s - 1.0));
    out.upper = upper.value();
  }
  return out;
}

}  // namespace

PressureEstimate pressure(const PressureQuery& query) {
  query.alphabet.validate();
  if (!(query.tol > 0.0)) throw DomainError("tolerance must be positive");
  const double t = query.t;
  const double beta = query.beta;
  if (query.alphabet.infinite() && !is_finite(t, beta)) return infinite_marker();

  PressureEstimate out = t == 0.0 ? zeta_slice(beta, query.alphabet)
                                  : pressure_via_operator(t, beta, query.alphabet,
                                                          std::min(query.tol, 1e-10), 16);
  if (t >= 0.0 && query.alphabet.min_digit == 1 && is_finite(t, beta)) {
    const AnalyticBounds bounds = analytic_bounds(t, beta);
    out.analytic_lower = bounds.lower;
    out.analytic_upper = bounds.upper;
  }
  return out;
}

}  // namespace agscale
