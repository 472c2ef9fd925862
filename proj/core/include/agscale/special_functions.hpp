#pragma once

// Riemann zeta, the Khintchin constant and the Gauss-measure averages of the
// arithmetic and geometric potentials. Every value carries a truncation
// certificate.

namespace agscale {

/// A numerical value with a bound on its truncation error: the true value lies
/// in [value - tail_bound, value + tail_bound].
struct TailBoundedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

enum class ZetaMethod {
  kAuto,            ///< integral test when it needs at most 2^20 terms, else Euler-Maclaurin
  kIntegralTest,    ///< direct summation plus the integral-test bracket on the remainder
  kEulerMaclaurin,  ///< Euler-Maclaurin remainder, bounded by the first omitted term
};

/// Riemann zeta at real s > 1 with |value - zeta(s)| <= tail_bound <= tol.
/// Throws DomainError for s <= 1 (pole at 1) or tol <= 0.
TailBoundedValue zeta(double s, double tol, ZetaMethod method = ZetaMethod::kAuto);

/// sum_{k >= first} k^-s for s > 1 and first >= 1, by Euler-Maclaurin.
TailBoundedValue zeta_tail(double s, double first);

/// Khintchin's constant prod_k (1 + 1/(k(k+2)))^(log k / log 2).
/// Two truncation levels are required to agree within tol.
TailBoundedValue khintchin_constant(double tol);

/// 12 log 2 log K0 / pi^2, the almost-sure scaling exponent, with error <= tol.
double alpha0(double tol);

/// Gauss-measure integrals of the arithmetic potential psi = -2 log a_1 and of
/// the geometric potential phi = 2 log x.
struct GaussIntegrals {
  double int_psi = 0.0;  ///< = -2 log K0
  double int_phi = 0.0;  ///< = -pi^2 / (6 log 2)
};

/// Evaluated independently of the closed forms: int_phi by quadrature of
/// 2 log(x) / ((1 + x) log 2) and int_psi by a summation-by-parts series.
GaussIntegrals gauss_integrals();

}  // namespace agscale
