#pragma once

// Shared numerical building blocks: compensated sums, streaming log-sum-exp,
// fixed Gauss-Legendre panels and Euler-Maclaurin tails of smooth series.

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include <boost/math/differentiation/autodiff.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>

namespace agscale {

inline constexpr double kGoldenMean = std::numbers::phi;
/// -2 log(golden mean): the uniform upper bound on dP/dt.
inline const double kPressureSlopeBound = -2.0 * std::log(std::numbers::phi);
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Streaming accumulation of log(sum_i exp(x_i)). Accepts -inf terms.
class LogSumExp {
 public:
  void add(double log_term) noexcept {
    if (log_term == -kInfinity) return;
    if (log_term > shift_) {
      if (shift_ != -kInfinity) acc_ *= std::exp(shift_ - log_term);
      shift_ = log_term;
    }
    acc_ += std::exp(log_term - shift_);
  }
  void merge(const LogSumExp& other) noexcept {
    if (other.shift_ == -kInfinity) return;
    if (other.shift_ > shift_) {
      if (shift_ != -kInfinity) acc_ *= std::exp(shift_ - other.shift_);
      shift_ = other.shift_;
      acc_ += other.acc_;
    } else {
      acc_ += other.acc_ * std::exp(other.shift_ - shift_);
    }
  }
  double value() const noexcept {
    return shift_ == -kInfinity ? -kInfinity : shift_ + std::log(acc_);
  }

 private:
  double shift_ = -kInfinity;
  double acc_ = 0.0;
};

/// Nodes and weights of a composite Gauss-Legendre rule.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Composite rule on [lo, hi] with `panels` equal panels of 10-point Gauss-Legendre.
QuadratureRule composite_gauss_legendre(double lo, double hi, int panels);

/// A series remainder together with an error estimate.
struct TailSum {
  double value = 0.0;
  double error = 0.0;
};

/// sum_{k >= first} g(k) for g smooth, eventually monotone and integrable,
/// by the midpoint Euler-Maclaurin formula anchored at first - 1/2.
///
/// `g` must be callable with `double` and with Boost autodiff variables, so
/// write it using ADL-friendly `log`, `exp`, `pow`. The reported error is the
/// first omitted correction plus the quadrature error estimate.
template <class Fn>
TailSum euler_maclaurin_tail(const Fn& g, double first) {
  using boost::math::differentiation::make_fvar;
  const double anchor = first - 0.5;

  boost::math::quadrature::exp_sinh<double> integrator;
  double quad_error = 0.0;
  const double integral = integrator.integrate(
      [&](double x) { return static_cast<double>(g(x)); }, anchor, kInfinity, 1e-14,
      &quad_error);

  const auto jet = g(make_fvar<double, 5>(anchor));
  const double d1 = jet.derivative(1);
  const double d3 = jet.derivative(3);
  const double d5 = jet.derivative(5);

  TailSum out;
  out.value = integral + d1 / 24.0 - 7.0 * d3 / 5760.0;
  out.error = std::abs(31.0 * d5 / 967680.0) + quad_error;
  return out;
}

}  // namespace agscale
