#include "agscale/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "agscale/errors.hpp"
#include "agscale/numerics.hpp"

namespace agscale {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// sum_{k=1}^{n-1} k^-s, accumulated from the small terms up.
double zeta_partial(double s, long n) {
  CompensatedSum sum;
  for (long k = n - 1; k >= 1; --k) sum.add(std::pow(static_cast<double>(k), -s));
  return sum.value();
}

}  // namespace

TailBoundedValue zeta_tail(double s, double first) {
  if (!(s > 1.0)) throw DomainError("zeta tail requires s > 1");
  if (!(first >= 1.0)) throw DomainError("zeta tail requires first >= 1");
  const double n = first;
  // sum_{k>=n} k^-s = n^{1-s}/(s-1) + n^-s/2
  //                   + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) n^{-s-2j+1} + R_p
  // and for real s the remainder is bounded by the first omitted term.
  const double n_pow = std::pow(n, -s);
  CompensatedSum sum;
  sum.add(n * n_pow / (s - 1.0));
  sum.add(0.5 * n_pow);
  double rising = s;          // s (s+1) ... (s+2j-2)
  double power = n_pow / n;   // n^{-s-2j+1}
  double last = kInfinity;
  for (int j = 1; j <= 30; ++j) {
    const double term = boost::math::bernoulli_b2n<double>(j) /
                        boost::math::factorial<double>(2 * j) * rising * power;
    if (std::abs(term) >= last) break;  // asymptotic series started to diverge
    if (std::abs(term) < 1e-18 * std::abs(sum.value())) {
      return {sum.value(), std::abs(term)};
    }
    sum.add(term);
    last = std::abs(term);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    power /= n * n;
  }
  return {sum.value(), last};
}

TailBoundedValue zeta(double s, double tol, ZetaMethod method) {
  if (!(s > 1.0)) throw DomainError("zeta(s) requires s > 1 (pole at s = 1)");
  if (!(tol > 0.0)) throw DomainError("zeta tolerance must be positive");

  // The integral test brackets sum_{k>=N} k^-s inside
  // [N^{1-s}/(s-1), N^{1-s}/(s-1) + N^-s]; we report the midpoint.
  // zeta(s) <= s / (s - 1) bounds the rounding term; the remainder gets the rest of tol.
  const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * s / (s - 1.0);
  const double budget = tol > 2.0 * rounding ? tol - rounding : tol;
  const double n_needed = std::ceil(std::pow(2.0 * budget, -1.0 / s));
  const bool use_integral =
      method == ZetaMethod::kIntegralTest ||
      (method == ZetaMethod::kAuto && n_needed <= static_cast<double>(1 << 20));

  if (use_integral) {
    const long n = std::max(2L, static_cast<long>(n_needed));
    const double nd = static_cast<double>(n);
    const double head = std::pow(nd, -s);
    CompensatedSum sum;
    sum.add(zeta_partial(s, n));
    sum.add(nd * head / (s - 1.0));
    sum.add(0.5 * head);
    return {sum.value(), 0.5 * head + 4.0 * std::numeric_limits<double>::epsilon() * sum.value()};
  }

  // Euler-Maclaurin: direct terms below N, asymptotic tail from N.
  long n = std::max(10L, static_cast<long>(std::ceil(s)) + 10);
  for (;;) {
    const TailBoundedValue tail = zeta_tail(s, static_cast<double>(n));
    const double head = zeta_partial(s, n);
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * (head + tail.value);
    if (tail.tail_bound + rounding <= tol || n > (1L << 24)) {
      return {head + tail.value, tail.tail_bound + rounding};
    }
    n *= 4;
  }
}

namespace {

// log k * log(1 + 1/(k(k+2))): the k-th term of log2(K0) times log 2.
template <class T>
T khintchin_term(const T& k) {
  using std::log;
  using std::log1p;
  if constexpr (std::is_same_v<T, double>) {
    return log(k) * log1p(1.0 / (k * (k + 2.0)));
  } else {
    return log(k) * log(1.0 + 1.0 / (k * (k + 2.0)));
  }
}

struct LogKhintchin {
  double value;  // log K0
  double error;
};

LogKhintchin log_khintchin(long cutoff) {
  CompensatedSum sum;
  for (long k = cutoff - 1; k >= 2; --k) sum.add(khintchin_term(static_cast<double>(k)));
  const TailSum tail =
      euler_maclaurin_tail([](const auto& k) { return khintchin_term(k); },
                           static_cast<double>(cutoff));
  sum.add(tail.value);
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * sum.value();
  return {sum.value() / kLn2, (tail.error + rounding) / kLn2};
}

}  // namespace

TailBoundedValue khintchin_constant(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  long cutoff = 256;
  for (;;) {
    const LogKhintchin coarse = log_khintchin(cutoff);
    const LogKhintchin fine = log_khintchin(2 * cutoff);
    const double k0 = std::exp(fine.value);
    const double bound = k0 * std::max(fine.error, 0.0);
    const double spread = k0 * std::abs(fine.value - coarse.value);
    if ((bound <= tol && spread <= tol) || cutoff > (1L << 22)) {
      return {k0, std::max(bound, spread)};
    }
    cutoff *= 4;
  }
}

double alpha0(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double scale = 12.0 * kLn2 / (std::numbers::pi * std::numbers::pi);
  // d(alpha0) = scale * dK / K
  const TailBoundedValue k0 = khintchin_constant(tol / scale);
  return scale * std::log(k0.value);
}

GaussIntegrals gauss_integrals() {
  GaussIntegrals out;

  boost::math::quadrature::tanh_sinh<double> integrator;
  const double log_over = integrator.integrate(
      [](double x) { return std::log(x) / (1.0 + x); }, 0.0, 1.0, 1e-15);
  out.int_phi = 2.0 / kLn2 * log_over;

  // sum_k log k * mu_g[k] with mu_g[k] = F(k) - F(k+1), F(k) = log2(1 + 1/k),
  // summed by parts: sum_{k>=2} F(k) log(k / (k-1)).
  const auto term = [](const auto& k) {
    using std::log;
    return log(1.0 + 1.0 / k) * (log(k) - log(k - 1.0));
  };
  constexpr long cutoff = 4096;
  CompensatedSum sum;
  for (long k = cutoff - 1; k >= 2; --k) {
    const double kd = static_cast<double>(k);
    sum.add(std::log1p(1.0 / kd) * -std::log1p(-1.0 / kd));
  }
  sum.add(euler_maclaurin_tail(term, static_cast<double>(cutoff)).value);
  out.int_psi = -2.0 / kLn2 * sum.value();
  return out;
}

}  // namespace agscale
