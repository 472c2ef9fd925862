#include "agscale/thermodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "agscale/errors.hpp"
#include "agscale/numerics.hpp"
#include "agscale/special_functions.hpp"
#include "agscale/transfer_operator.hpp"

namespace agscale {

namespace {

// 2 log(golden mean): every t-slope of P is at most -kSlope.
const double kSlope = -kPressureSlopeBound;

constexpr double kBetaMin = -60.0;
constexpr double kBetaMax = 40.0;
constexpr int kMaxSteps = 200;

double pressure_at(double t, double beta, const SolverConfig& config) {
  const OperatorSpec spec{t, beta, config.alphabet, config.degree_for(beta)};
  return leading_eigenvalue(spec, config.eigen_tol).log_lambda;
}

// Illinois false position on a bracket with f(lo) > 0 > f(hi) (or the reverse).
// Stops when |f| <= ftol or the bracket is below xtol.
template <class Fn>
double illinois(const Fn& f, double lo, double f_lo, double hi, double f_hi, double ftol,
                double xtol, double* f_root) {
  int side = 0;
  double x = lo;
  double fx = f_lo;
  for (int step = 0; step < kMaxSteps; ++step) {
    x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(x > std::min(lo, hi) && x < std::max(lo, hi))) x = 0.5 * (lo + hi);
    fx = f(x);
    if (std::abs(fx) <= ftol) break;
    if ((fx > 0.0) == (f_lo > 0.0)) {
      lo = x;
      f_lo = fx;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = fx;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    if (std::abs(hi - lo) <= xtol) break;
  }
  *f_root = fx;
  return x;
}

double implicit_derivative(double t, double beta, const SolverConfig& config) {
  constexpr double h = 1e-5;
  const double p_t = (pressure_at(t + h, beta, config) - pressure_at(t - h, beta, config)) / (2 * h);
  const double p_b = (pressure_at(t, beta + h, config) - pressure_at(t, beta - h, config)) / (2 * h);
  return -p_b / p_t;
}

}  // namespace

FreeEnergySample solve_t(double beta, double tol, const SolverConfig& config) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  config.alphabet.validate();
  const auto p = [&](double t) { return pressure_at(t, beta, config); };
  const double line = 0.5 - beta;  // finiteness line of the infinite alphabet

  double lo = 0.0;
  double p_lo = 0.0;
  if (config.alphabet.infinite() && line >= 0.0) {
    // P blows up at the line, so a point close enough to it is positive.
    double gap = 0.25;
    for (;;) {
      lo = line + gap;
      p_lo = p(lo);
      if (p_lo > 0.0) break;
      gap *= 0.25;
      if (gap < 1e-12) {
        throw BracketError("no positive pressure above the finiteness line at beta = " +
                           std::to_string(beta));
      }
    }
  } else {
    lo = config.alphabet.infinite() ? std::max(0.0, line + 0.25) : 0.0;
    p_lo = p(lo);
    for (int i = 0; p_lo < 0.0; ++i) {
      if (i > 20) throw BracketError("pressure stays negative at beta = " + std::to_string(beta));
      lo += p_lo / kSlope;  // P(lo + P/kSlope) >= 0 by the slope bound
      if (config.alphabet.infinite()) lo = std::max(lo, line + 1e-9);
      p_lo = p(lo);
    }
  }

  FreeEnergySample out;
  out.beta = beta;
  out.alphabet = config.alphabet;
  const double ftol = tol * kSlope;
  if (p_lo <= ftol) {
    out.t = lo;
    out.residual = std::abs(p_lo);
  } else {
    // P(hi) <= P(lo) - kSlope (hi - lo) = 0; the small push absorbs rounding
    double step = p_lo / kSlope;
    double hi = lo + step * (1.0 + 1e-9) + 1e-12;
    double p_hi = p(hi);
    for (int i = 0; p_hi > 0.0; ++i) {
      if (i > 10) {
        throw BracketError("slope-bound bracket failed at beta = " + std::to_string(beta) +
                           " on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
      step *= 2.0;
      hi = lo + step;
      p_hi = p(hi);
    }
    double p_root = 0.0;
    const double xtol = 1e-3 * tol;
    out.t = illinois(p, lo, p_lo, hi, p_hi, ftol, xtol, &p_root);
    out.residual = std::abs(p_root);
    if (out.residual > ftol) {
      throw ConvergenceError("free-energy root stalled at beta = " + std::to_string(beta),
                             out.residual);
    }
  }
  out.derivative = implicit_derivative(out.t, beta, config);
  return out;
}

double t_prime(double beta, double h, double tol, const SolverConfig& config) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const double step = h * std::max(1.0, std::abs(beta));
  const double up = solve_t(beta + step, tol, config).t;
  const double down = solve_t(beta - step, tol, config).t;
  return (up - down) / (2.0 * step);
}

SpectrumPoint spectrum_point(double alpha, double tol, const SolverConfig& config) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  SpectrumPoint out;
  out.alpha = alpha;
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    out.empty_level_set = true;
    out.beta = std::numeric_limits<double>::quiet_NaN();
    out.t = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (alpha == 0.0) {
    out.beta = kInfinity;
    return out;
  }
  if (alpha == 1.0) {
    out.beta = -kInfinity;
    out.t = kInfinity;
    out.f = 0.5;
    return out;
  }

  // g(beta) = t'(beta) + alpha is strictly increasing.
  FreeEnergySample last;
  const auto g = [&](double beta) {
    last = solve_t(beta, tol, config);
    return last.derivative + alpha;
  };

  double a = 0.0;
  double g_a = g(a);
  FreeEnergySample sample_a = last;
  double b = 0.0;
  double g_b = g_a;
  FreeEnergySample sample_b = last;
  const double direction = g_a < 0.0 ? 1.0 : -1.0;
  const double limit = direction > 0.0 ? kBetaMax : kBetaMin;
  double step = 0.5;
  while ((g_b < 0.0) == (g_a < 0.0) && g_b != 0.0) {
    a = b;
    g_a = g_b;
    sample_a = sample_b;
    if (b == limit) {
      const double edge = -(g_b - alpha);
      const double centre = -(g(0.0) - alpha);
      throw UnreachableAlpha("alpha = " + std::to_string(alpha) +
                                 " is outside the reachable range of -t' on beta in [" +
                                 std::to_string(kBetaMin) + ", " + std::to_string(kBetaMax) + "]",
                             std::min(edge, centre), std::max(edge, centre));
    }
    b = direction > 0.0 ? std::min(b + step, limit) : std::max(b - step, limit);
    step *= 2.0;
    g_b = g(b);
    sample_b = last;
  }

  double beta = b;
  double g_root = g_b;
  double xtol_used = 0.0;
  FreeEnergySample at = sample_b;
  if (g_b != 0.0 && g_a != 0.0) {
    xtol_used = 1e-9 * std::max(1.0, std::abs(b));
    beta = illinois(g, a, g_a, b, g_b, 1e-11, xtol_used, &g_root);
    at = last;
  } else if (g_a == 0.0) {
    beta = a;
    g_root = g_a;
    at = sample_a;
  }

  out.beta = beta;
  out.t = at.t;
  const double raw = at.t + beta * alpha;
  out.f = std::max(raw, 0.0);
  // f is stationary in beta, so only the t error and the g residual enter.
  out.error = tol + at.residual / kSlope + std::abs(g_root) * xtol_used;
  return out;
}

std::vector<SpectrumPoint> spectrum_curve(const std::vector<double>& alpha_grid, double tol,
                                          const SolverConfig& config) {
  std::vector<SpectrumPoint> out;
  out.reserve(alpha_grid.size());
  for (double alpha : alpha_grid) {
    try {
      out.push_back(spectrum_point(alpha, tol, config));
    } catch (const std::exception& e) {
      SpectrumPoint failed;
      failed.alpha = alpha;
      failed.beta = failed.t = failed.f = std::numeric_limits<double>::quiet_NaN();
      failed.failure = e.what();
      out.push_back(failed);
    }
  }
  return out;
}

double dim_Iq(std::int64_t q, double tol) {
  if (q < 1) throw DomainError("q must be >= 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  SolverConfig config;
  std::int64_t explicit_digits = 64;
  double achieved = kInfinity;
  for (int round = 0; round < 8; ++round) {
    config.alphabet = AlphabetSpec{q, q + explicit_digits - 1, TailMode::kEulerMaclaurin};
    const FreeEnergySample root = solve_t(0.0, tol, config);
    const EigenResult eig =
        leading_eigenvalue(OperatorSpec{root.t, 0.0, config.alphabet, config.degree}, config.eigen_tol);
    achieved = eig.tail_bound / kSlope;
    if (achieved <= tol) return root.t;
    explicit_digits *= 4;
  }
  throw ConvergenceError("dim I_q tail effect stays above tol; achieved " +
                             std::to_string(achieved),
                         achieved);
}

double ramharter_ratio(std::int64_t q, double tol) {
  if (q < 3) throw DomainError("ramharter ratio needs q >= 3 (log log q > 0)");
  const double lq = std::log(static_cast<double>(q));
  return (dim_Iq(q, tol) - 0.5) * lq / std::log(lq);
}

namespace {

struct Block {
  std::int64_t first = 0;
  std::int64_t last = 0;
  double mass = 0.0;  // sum of k^{-(1+eps)} over the block
};

// Geometric blocks of [1, n]: single integers while k is small, width ~0.5% of k later.
std::vector<Block> geometric_blocks(std::int64_t n, double exponent) {
  std::vector<Block> blocks;
  std::int64_t first = 1;
  while (first <= n) {
    const std::int64_t last =
        std::min(n, std::max(first, static_cast<std::int64_t>(std::floor(first * 1.005))));
    CompensatedSum mass;
    for (std::int64_t k = last; k >= first; --k) {
      mass.add(std::exp(-exponent * std::log(static_cast<double>(k))));
    }
    blocks.push_back({first, last, mass.value()});
    first = last + 1;
  }
  return blocks;
}

// log (1 + 1/(k(l+1)))^{2 beta}
double log_factor(double beta, double k, double l) {
  return 2.0 * beta * std::log1p(1.0 / (k * (l + 1.0)));
}

}  // namespace

EpsilonLemmaReport verify_epsilon_lemma(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw DomainError("epsilon must lie in (0, 1/2)");
  }
  EpsilonLemmaReport out;
  out.epsilon = epsilon;
  out.N = std::pow(epsilon / 3.0, -2.0 / epsilon);
  if (out.N > 1e8) {
    throw BudgetExceeded("N(eps) = " + std::to_string(out.N) + " exceeds the 1e8 term budget", 0);
  }
  out.beta_eps = 3.0 / std::numbers::ln2 * std::log(epsilon) * std::pow(epsilon / 3.0, -4.0 / epsilon);

  const double s = 1.0 + epsilon;
  const auto n = static_cast<std::int64_t>(std::floor(out.N));

  // (A): the factor is <= 1 since beta(eps) < 0, then the sum splits.
  const TailBoundedValue tail = zeta_tail(s, static_cast<double>(n + 1));
  const TailBoundedValue full = zeta(s, 1e-12);
  out.sum_A = 2.0 * (tail.value + tail.tail_bound) * (full.value + full.tail_bound);

  // (B): the factor increases in k and l, so each block is bounded by its corners.
  const auto blocks = geometric_blocks(n, s);
  CompensatedSum upper;
  CompensatedSum lower;
  for (const Block& bk : blocks) {
    for (const Block& bl : blocks) {
      const double mass = bk.mass * bl.mass;
      upper.add(mass * std::exp(log_factor(out.beta_eps, static_cast<double>(bk.last),
                                           static_cast<double>(bl.last))));
      lower.add(mass * std::exp(log_factor(out.beta_eps, static_cast<double>(bk.first),
                                           static_cast<double>(bl.first))));
    }
  }
  out.sum_B = upper.value();
  out.sum_B_lower = lower.value();
  out.pass = out.sum_A < 0.5 && out.sum_B < 0.5;
  return out;
}

BoundaryReport boundary_asymptotic_check(const std::vector<double>& delta_grid, double tol,
                                         const SolverConfig& config) {
  for (double delta : delta_grid) {
    if (!(delta > 0.0 && delta < 0.5)) throw DomainError("delta must lie in (0, 1/2)");
  }
  BoundaryReport report;
  for (double delta : delta_grid) {
    BoundaryRow row;
    row.delta = delta;
    try {
      const SpectrumPoint point = spectrum_point(1.0 - delta, tol, config);
      row.f = point.f;
      const double inv = std::log(1.0 / delta);
      if (std::log(inv) <= 0.0) {
        row.ratio = std::numeric_limits<double>::quiet_NaN();
        row.failure = "log log(1/delta) <= 0";
      } else {
        row.ratio = (point.f - 0.5) * inv / std::log(inv);
        row.in_band = row.ratio > report.c1 && row.ratio < report.c2;
      }
    } catch (const std::exception& e) {
      row.f = row.ratio = std::numeric_limits<double>::quiet_NaN();
      row.failure = e.what();
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace agscale
