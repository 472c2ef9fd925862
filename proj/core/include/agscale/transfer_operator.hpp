#pragma once

// (L f)(x) = sum_{a=q}^{M} (a+x)^{-2t} a^{-2 beta} f(1/(a+x)) discretized by
// polynomial collocation at Chebyshev-Lobatto points of [0, 1].

#include <span>
#include <vector>

#include "agscale/alphabet.hpp"

namespace agscale {

struct OperatorSpec {
  double t = 1.0;
  double beta = 0.0;
  AlphabetSpec alphabet{};
  int degree = 16;  ///< polynomial degree; degree + 1 nodes

  /// Throws DomainError for degree < 4, a bad alphabet, or an infinite
  /// alphabet with 2(t + beta) <= 1 (the Euler-Maclaurin tail diverges).
  void validate() const;
};

struct EigenResult {
  double log_lambda = 0.0;
  std::vector<double> eigenfunction;  ///< at the nodes, sup-normalized, all > 0
  double residual = 0.0;              ///< ||L f - lambda f|| / (lambda ||f||), sup norms
  /// Bound on the change of log lambda caused by the alphabet cut-off
  /// (dropped digits) or by the Euler-Maclaurin remainder (folded tail).
  double tail_bound = 0.0;
  int iterations = 0;
};

/// Collocation matrix of L. Entries are scaled by exp(-log_scale) so that the
/// largest branch weight is 1; the true operator is exp(log_scale) * matrix.
class TransferOperator {
 public:
  explicit TransferOperator(const OperatorSpec& spec);

  const OperatorSpec& spec() const noexcept { return spec_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  double log_scale() const noexcept { return log_scale_; }
  /// Row-major (degree+1) x (degree+1).
  std::span<const double> matrix() const noexcept { return matrix_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }

  /// Samples of L f at the nodes, f given by its samples at the nodes.
  /// Throws DomainError on non-finite samples or a size mismatch.
  std::vector<double> apply(std::span<const double> f) const;

  /// Estimate of the alphabet-tail effect on log lambda for an eigenfunction
  /// with sup/inf ratio `distortion` and eigenvalue exp(log_lambda).
  double tail_bound(double log_lambda, double distortion) const;

 private:
  std::vector<double> scaled_apply(std::span<const double> f) const;

  OperatorSpec spec_;
  std::vector<double> nodes_;
  std::vector<double> bary_;
  std::vector<double> matrix_;
  double log_scale_ = 0.0;
  double log_dropped_ = 0.0;  // truncate: log of a bound on the dropped weights
  double log_em_error_ = 0.0; // euler-maclaurin: log of the remainder estimate

  friend EigenResult leading_eigenvalue(const TransferOperator&, double);
};

/// Values at arbitrary points of the polynomial interpolating `samples` at the
/// Chebyshev-Lobatto nodes of the given degree.
double interpolate(std::span<const double> samples, double x);

/// Leading eigenvalue by power iteration with sup-norm normalization, started
/// from f = 1, capped at 1e5 iterations. Throws ConvergenceError (carrying the
/// last residual) when the cap is hit and DomainError for tol <= 0.
EigenResult leading_eigenvalue(const OperatorSpec& spec, double tol);
EigenResult leading_eigenvalue(const TransferOperator& op, double tol);

/// P(t, beta) on `alphabet` as log lambda; bounds widened by residual and tail.
PressureEstimate pressure_via_operator(double t, double beta, const AlphabetSpec& alphabet,
                                       double tol, int degree = 16);

}  // namespace agscale
