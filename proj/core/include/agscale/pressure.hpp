#pragma once

// The arithmetic-geometric pressure
//   P(t, beta) = lim (1/n) log sum_{|w| = n} exp sup_{[w]} S_n(t phi + beta psi),
// phi(x) = 2 log x, psi(x) = -2 log a_1(x), by enumeration, analytic bounds and
// (delegated) the transfer operator.

#include <cstdint>

#include "agscale/alphabet.hpp"

namespace agscale {

/// True iff P(t, beta) < infinity on the full system, i.e. 2(t + beta) > 1.
bool is_finite(double t, double beta) noexcept;

struct PressureQuery {
  double t = 1.0;
  double beta = 0.0;
  AlphabetSpec alphabet{};
  int depth = 1;  ///< enumeration only
  double tol = 1e-10;
  /// Enumeration budget in words (M - q + 1)^depth.
  double max_words = 1e9;
};

/// log Z_n over the explicit alphabet {q, ..., M} (the tail mode is ignored).
/// The cylinder supremum is exact: S_n phi ranges over
/// [-2 log(q_n + q_{n-1}), -2 log q_n] on [w].
/// Throws BudgetExceeded with the largest admissible depth.
double partition_sum(const PressureQuery& query);

struct AnalyticBounds {
  double lower = 0.0;
  double upper = 0.0;
  /// Certified remainders of the two infinite sums, already folded into
  /// lower and upper (lower uses a lower estimate, upper an upper one).
  double lower_tail = 0.0;
  double upper_tail = 0.0;
};

/// lower = log sum_k (k+1)^{-2t} k^{-2 beta},
/// upper = 1/2 log sum_{k,l} (kl)^{-2(t+beta)} (1 + 1/(k(l+1)))^{-2t}.
/// Requires t >= 0 (DomainError otherwise) and 2(t + beta) > 1.
/// `cutoff` is the number of explicitly summed terms per index.
AnalyticBounds analytic_bounds(double t, double beta, std::int64_t cutoff = 2000);

/// Pressure of the query's alphabet. Divergent queries (infinite alphabet with
/// 2(t + beta) <= 1) return the +inf marker. t = 0 uses the closed form
/// log sum k^{-2 beta}; everything else goes through the transfer operator
/// with degree 16. Full-system queries with t >= 0 carry the analytic bounds.
PressureEstimate pressure(const PressureQuery& query);

}  // namespace agscale
