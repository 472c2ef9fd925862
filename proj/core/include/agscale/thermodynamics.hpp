#pragma once

// Free energy t(beta) (the zero of t -> P(t, beta)), its derivative, the
// Legendre spectrum f(alpha), restricted dimensions dim I_q and the checks on
// the large-|beta| regime.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agscale/alphabet.hpp"

namespace agscale {

struct SolverConfig {
  AlphabetSpec alphabet = AlphabetSpec::full(200);
  int degree = 16;
  /// For beta below this the degree is doubled: large negative beta makes the
  /// eigenfunction steep near 0.
  double high_degree_beta = -8.0;
  double eigen_tol = 1e-13;

  int degree_for(double beta) const noexcept {
    return beta < high_degree_beta ? 2 * degree : degree;
  }
};

struct FreeEnergySample {
  double beta = 0.0;
  double t = 0.0;
  double residual = 0.0;    ///< |P(t, beta)| at the returned root
  double derivative = 0.0;  ///< t'(beta) = -P_beta / P_t at the root
  AlphabetSpec alphabet{};
};

/// Root of P(., beta) = 0 with |t - t*| <= tol, using dP/dt <= -2 log(golden)
/// to turn residuals into t-errors. Throws BracketError when no sign change
/// is found inside the search window.
FreeEnergySample solve_t(double beta, double tol, const SolverConfig& config = {});

/// Central difference (t(beta + h') - t(beta - h')) / (2 h'), h' = h max(1, |beta|).
double t_prime(double beta, double h = 1e-4, double tol = 1e-11,
               const SolverConfig& config = {});

struct SpectrumPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double t = 0.0;
  double f = 0.0;
  double error = 0.0;
  /// alpha outside [0, 1]: the level set is empty and f = 0 by convention.
  bool empty_level_set = false;
  /// Per-point failure message (spectrum_curve only).
  std::optional<std::string> failure;
};

/// f(alpha) = max{t(beta) + beta alpha, 0} where t'(beta) = -alpha.
/// alpha = 0 and alpha = 1 return the limits 0 and 1/2. Throws UnreachableAlpha
/// when -t' does not reach alpha inside the beta window [-60, 40].
SpectrumPoint spectrum_point(double alpha, double tol = 1e-9, const SolverConfig& config = {});

/// Pointwise spectrum; failures are recorded in SpectrumPoint::failure.
std::vector<SpectrumPoint> spectrum_curve(const std::vector<double>& alpha_grid,
                                          double tol = 1e-9, const SolverConfig& config = {});

/// Hausdorff dimension of I_q = {x : all digits >= q}, the zero of
/// t -> P_q(t, 0), within tol.
double dim_Iq(std::int64_t q, double tol = 1e-9);

/// (dim I_q - 1/2) log q / log log q, for q >= 3.
double ramharter_ratio(std::int64_t q, double tol = 1e-9);

struct EpsilonLemmaReport {
  double epsilon = 0.0;
  double N = 0.0;         ///< (eps/3)^{-2/eps}
  double beta_eps = 0.0;  ///< (3 / log 2) log(eps) (eps/3)^{-4/eps}
  double sum_A = 0.0;     ///< certified upper bound of the sum over k > N or l > N
  double sum_B = 0.0;     ///< certified upper bound of the sum over k, l <= N
  double sum_B_lower = 0.0;
  bool pass = false;
};

/// Both halves of the double sum
///   sum (kl)^{-(1+eps)} (1 + 1/(k(l+1)))^{2 beta(eps)}
/// with certified upper bounds. Requires 0 < eps < 1/2 and N(eps) <= 1e8.
EpsilonLemmaReport verify_epsilon_lemma(double epsilon);

struct BoundaryRow {
  double delta = 0.0;
  double f = 0.0;
  double ratio = 0.0;  ///< (f(1 - delta) - 1/2) log(1/delta) / log log(1/delta)
  bool in_band = false;
  std::optional<std::string> failure;
};

struct BoundaryReport {
  double c1 = 0.1;
  double c2 = 4.0;
  std::vector<BoundaryRow> rows;
};

/// Each delta must lie in (0, 1/2) (DomainError otherwise).
BoundaryReport boundary_asymptotic_check(const std::vector<double>& delta_grid,
                                         double tol = 1e-9, const SolverConfig& config = {});

}  // namespace agscale
