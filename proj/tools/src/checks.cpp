#include "agscale_cli/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <random>
#include <utility>

#include <agscale/cf_core.hpp>
#include <agscale/numerics.hpp>
#include <agscale/pressure.hpp>
#include <agscale/special_functions.hpp>
#include <agscale/thermodynamics.hpp>
#include <agscale/transfer_operator.hpp>

namespace agscale::cli {

std::string short_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += short_number(xs[i]);
  }
  return out;
}

// Runs `body`; an exception becomes a single failed check named `id`.
std::vector<CheckResult> guarded(const std::string& id,
                                 const std::function<std::vector<CheckResult>()>& body) {
  const auto start = Clock::now();
  try {
    return body();
  } catch (const std::exception& e) {
    return {CheckResult{id, "no error", std::string("error: ") + e.what(), "-", false, since(start)}};
  }
}

CheckResult within(std::string id, double expected, double got, double tol, double seconds) {
  return {std::move(id), short_number(expected), short_number(got), short_number(tol),
          std::abs(got - expected) <= tol, seconds};
}

const double kSlope = -kPressureSlopeBound;

// ---- criteria ------------------------------------------------------------

std::vector<CheckResult> alpha0_check() {
  const auto start = Clock::now();
  const double a = alpha0(1e-5);
  const double seconds = since(start);
  CheckResult r = within("alpha0", 0.8325, a, 5e-4, seconds);
  const bool rounds = std::round(a * 1e4) == 8325.0;
  r.pass = r.pass && rounds && seconds < 1.0;
  r.tol += " (rounds to 4 dp, <1 s)";
  return {r};
}

std::vector<CheckResult> t_at_zero_check() {
  const auto start = Clock::now();
  SolverConfig config;
  config.alphabet = AlphabetSpec::full(10000);
  config.degree = 16;
  const FreeEnergySample s = solve_t(0.0, 1e-10, config);
  const double seconds = since(start);
  CheckResult r = within("t_at_zero", 1.0, s.t, 1e-3, seconds);
  r.pass = r.pass && seconds < 10.0;
  r.tol += " (<10 s)";
  return {r};
}

// Argmax of f on nested grids of spacing 0.05, 0.005 and 5e-4.
double spectrum_argmax() {
  double lo = 0.05;
  double hi = 0.95;
  double step = 0.05;
  double best = 0.5;
  for (int level = 0; level < 3; ++level) {
    double best_f = -1.0;
    const int count = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    for (int i = 0; i < count; ++i) {
      const double alpha = lo + i * step;
      if (alpha <= 0.0 || alpha >= 1.0) continue;
      const double f = spectrum_point(alpha, 1e-10).f;
      if (f > best_f) {
        best_f = f;
        best = alpha;
      }
    }
    lo = best - step;
    hi = best + step;
    step /= 10.0;
  }
  return best;
}

std::vector<CheckResult> apex_checks() {
  std::vector<CheckResult> out;
  const double a0 = alpha0(1e-12);
  auto start = Clock::now();
  const SpectrumPoint p = spectrum_point(a0, 1e-10);
  const double seconds = since(start);
  out.push_back(within("apex_f", 1.0, p.f, 2e-3, seconds));
  out.push_back(within("apex_beta", 0.0, p.beta, 2e-2, seconds));
  start = Clock::now();
  out.push_back(within("spectrum_argmax", a0, spectrum_argmax(), 1e-3, since(start)));
  return out;
}

std::vector<CheckResult> t_prime_checks() {
  std::vector<CheckResult> out;
  const double a0 = alpha0(1e-12);
  auto start = Clock::now();
  const double tp = t_prime(0.0, 1e-4, 1e-11);
  const double seconds = since(start);
  CheckResult r = within("t_prime_zero", -a0, tp, 2e-3, seconds);
  r.pass = r.pass && seconds < 30.0;
  r.tol += " (<30 s)";
  out.push_back(r);
  start = Clock::now();
  const GaussIntegrals g = gauss_integrals();
  out.push_back(within("gauss_ratio", a0, g.int_psi / g.int_phi, 1e-6, since(start)));
  return out;
}

std::vector<CheckResult> zeta_slice_checks() {
  std::vector<CheckResult> out;
  for (double beta : {0.75, 1.0, 2.0}) {
    const auto start = Clock::now();
    PressureQuery q;
    q.t = 0.0;
    q.beta = beta;
    q.alphabet = AlphabetSpec::full(1000);
    const PressureEstimate p = pressure(q);
    const TailBoundedValue z = zeta(2.0 * beta, 1e-14);
    const double tail = 0.5 * (p.upper - p.lower) + z.tail_bound / z.value;
    out.push_back(within("zeta_slice_" + short_number(beta), std::log(z.value), p.value,
                         1e-6 + tail, since(start)));
  }
  return out;
}

std::vector<CheckResult> finiteness_checks() {
  std::vector<CheckResult> out;
  auto start = Clock::now();
  // quarter-integer grid, so the exact comparison 2(t + beta) > 1 is done in
  // integers: 8(t + beta) > 4
  const int ts[] = {-4, 0, 1, 2, 4};  // t = value / 4
  const int bs[] = {-2, 0, 1, 2, 4};
  int agree = 0;
  int boundary = 0;
  for (int t4 : ts) {
    for (int b4 : bs) {
      const bool lemma = 2 * (t4 + b4) > 4;
      if (2 * (t4 + b4) == 4) ++boundary;
      if (is_finite(t4 / 4.0, b4 / 4.0) == lemma) ++agree;
    }
  }
  out.push_back({"finiteness_grid", "25/25 agree (" + std::to_string(boundary) + " on boundary)",
                 std::to_string(agree) + "/25", "exact", agree == 25 && boundary > 0, since(start)});

  start = Clock::now();
  std::vector<double> logs;
  for (std::int64_t m : {100, 1000, 10000}) {
    logs.push_back(leading_eigenvalue(OperatorSpec{0.25, 0.25, AlphabetSpec::truncated(m), 16}, 1e-12)
                       .log_lambda);
  }
  const bool increasing = logs[0] < logs[1] && logs[1] < logs[2];
  out.push_back({"divergence_scan", "increase > 0.5 over M=1e2..1e4",
                 short_number(logs[2] - logs[0]) + " (" + join(logs) + ")", "0.5",
                 increasing && logs[2] - logs[0] > 0.5, since(start)});
  return out;
}

const std::vector<std::pair<double, double>>& sandwich_grid() {
  static const std::vector<std::pair<double, double>> grid = [] {
    std::vector<std::pair<double, double>> g;
    for (double t : {0.0, 0.5, 1.0}) {
      for (double beta : {0.6, 1.0, 2.0}) {
        if (is_finite(t, beta)) g.emplace_back(t, beta);
      }
    }
    return g;
  }();
  return grid;
}

std::string point_id(const std::string& prefix, double t, double beta) {
  return prefix + "_t" + short_number(t) + "_b" + short_number(beta);
}

std::vector<CheckResult> sandwich_checks() {
  std::vector<CheckResult> out;
  for (const auto& [t, beta] : sandwich_grid()) {
    const auto start = Clock::now();
    const PressureEstimate p = pressure_via_operator(t, beta, AlphabetSpec::full(1000), 1e-12);
    const AnalyticBounds b = analytic_bounds(t, beta);
    const bool ok = b.lower <= p.upper && p.lower <= b.upper;
    out.push_back({point_id("sandwich", t, beta),
                   "[" + short_number(b.lower) + ", " + short_number(b.upper) + "]",
                   short_number(p.value), "certified tails", ok, since(start)});
  }
  return out;
}

std::vector<CheckResult> oracle_checks() {
  std::vector<CheckResult> out;
  const AlphabetSpec alphabet = AlphabetSpec::truncated(30);
  for (const auto& [t, beta] : {std::pair{1.0, 0.0}, {0.8, 0.2}, {0.6, 0.6}}) {
    const double op = pressure_via_operator(t, beta, alphabet, 1e-13).value;
    for (int n = 2; n <= 6; ++n) {
      const auto start = Clock::now();
      PressureQuery q;
      q.t = t;
      q.beta = beta;
      q.alphabet = alphabet;
      q.depth = n;
      const double per_symbol = partition_sum(q) / n;
      const double tol = std::log(2.0) / n + 1e-6;
      CheckResult r{point_id("oracle_n" + std::to_string(n), t, beta), short_number(op),
                    short_number(per_symbol), short_number(tol),
                    std::abs(per_symbol - op) <= tol, since(start)};
      out.push_back(r);
    }
  }
  return out;
}

std::vector<CheckResult> slope_checks() {
  std::vector<CheckResult> out;
  constexpr double h = 1e-4;
  for (const auto& [t, beta] : sandwich_grid()) {
    const auto start = Clock::now();
    const AlphabetSpec alphabet = AlphabetSpec::full(1000);
    const double p0 = pressure_via_operator(t, beta, alphabet, 1e-13).value;
    const double p1 = pressure_via_operator(t + h, beta, alphabet, 1e-13).value;
    const double slope = (p1 - p0) / h;
    out.push_back({point_id("slope", t, beta), "<= " + short_number(-kSlope), short_number(slope),
                   "1e-06", slope <= -kSlope + 1e-6, since(start)});
  }
  return out;
}

std::vector<CheckResult> endpoint_checks() {
  std::vector<CheckResult> out;
  auto start = Clock::now();
  std::vector<double> low;
  for (double alpha : {0.15, 0.05, 0.02, 0.01}) low.push_back(spectrum_point(alpha, 1e-10).f);
  bool ok = low.back() > 0.0;
  for (std::size_t i = 1; i < low.size(); ++i) ok = ok && low[i] < low[i - 1];
  out.push_back({"endpoint_zero", "f decreasing toward 0 on alpha=0.15;0.05;0.02;0.01", join(low),
                 "monotone", ok, since(start)});

  start = Clock::now();
  std::vector<double> excess;
  for (double alpha : {0.9, 0.95, 0.98, 0.99, 0.995}) {
    excess.push_back(spectrum_point(alpha, 1e-10).f - 0.5);
  }
  ok = excess.back() > 0.0;
  for (std::size_t i = 1; i < excess.size(); ++i) ok = ok && excess[i] < excess[i - 1];
  out.push_back({"endpoint_half", "f-1/2 positive, decreasing on alpha=0.9..0.995", join(excess),
                 "monotone", ok, since(start)});
  return out;
}

std::vector<CheckResult> ramharter_checks() {
  const auto start = Clock::now();
  std::vector<double> ratios;
  for (std::int64_t q : {100, 1000, 10000}) ratios.push_back(ramharter_ratio(q, 1e-9));
  bool ok = true;
  for (double r : ratios) ok = ok && r >= 0.3 && r <= 0.8;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    ok = ok && std::abs(ratios[i] - 0.5) <= std::abs(ratios[i - 1] - 0.5) + 0.05;
  }
  const double seconds = since(start);
  return {{"ramharter", "in [0.3, 0.8], trend to 1/2 (slack 0.05/decade)", join(ratios),
           "0.05", ok && seconds < 300.0, seconds}};
}

std::vector<CheckResult> epsilon_checks() {
  std::vector<CheckResult> out;
  for (double eps : {0.30, 0.40, 0.45}) {
    const auto start = Clock::now();
    const EpsilonLemmaReport r = verify_epsilon_lemma(eps);
    const double seconds = since(start);
    char id[32];
    std::snprintf(id, sizeof id, "eps_lemma_%.2f", eps);
    out.push_back({id, "pass (A < 1/2, B < 1/2)",
                   "A=" + short_number(r.sum_A) + " B=" + short_number(r.sum_B), "<60 s",
                   r.pass && seconds < 60.0, seconds});
  }
  return out;
}

std::vector<Digit> random_digits(std::mt19937_64& rng, std::size_t length, Digit lo, Digit hi) {
  std::uniform_int_distribution<Digit> digit(lo, hi);
  std::vector<Digit> d(length);
  for (auto& x : d) x = digit(rng);
  return d;
}

std::vector<CheckResult> identity_checks() {
  std::vector<CheckResult> out;
  auto start = Clock::now();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> length(1, 50);
  int det_fail = 0;
  int sandwich_fail = 0;
  int refined_fail = 0;
  constexpr int kWords = 10000;
  for (int w = 0; w < kWords; ++w) {
    const DigitWord word(random_digits(rng, length(rng), 1, 100));
    const auto conv = convergents(word);
    BigInt p_prev = 0;
    BigInt q_prev = 1;
    bool det_ok = true;
    for (std::size_t k = 0; k < conv.size(); ++k) {
      const BigInt det = p_prev * conv[k].q - conv[k].p * q_prev;
      const int sign = (k + 1) % 2 == 0 ? 1 : -1;  // (-1)^n with n = k + 1
      if (det != sign) det_ok = false;
      p_prev = conv[k].p;
      q_prev = conv[k].q;
    }
    if (!det_ok) ++det_fail;
    const BigInt& qn = conv.back().q;
    const BigInt prod = digit_product(word);
    const BigInt upper = prod << word.size();
    if (!(prod <= qn && qn <= upper)) ++sandwich_fail;
    if (!(refined_denominator_bound(word) <= Rational(qn))) ++refined_fail;
  }
  const double seconds = since(start);
  const auto count = [&](const char* id, int fails) {
    out.push_back({id, "0 violations", std::to_string(fails) + " of " + std::to_string(kWords),
                   "exact", fails == 0, seconds});
  };
  count("determinant", det_fail);
  count("denominator_sandwich", sandwich_fail);
  count("refined_lower_bound", refined_fail);

  for (Digit q : {Digit{3}, Digit{10}, Digit{100}}) {
    start = Clock::now();
    const double floor = restricted_scaling_floor(q);
    int fails = 0;
    double worst = kInfinity;
    for (int w = 0; w < 2000; ++w) {
      const DigitWord word(random_digits(rng, length(rng), q, q + 100));
      const double r = scaling_ratio(word);
      worst = std::min(worst, r - floor);
      if (r < floor) ++fails;
    }
    // the extreme case: every digit equal to q
    for (std::size_t n : {1, 2, 10, 50}) {
      const double r = scaling_ratio(constant_word(q, n));
      worst = std::min(worst, r - floor);
      if (r < floor) ++fails;
    }
    out.push_back({"restricted_floor_q" + std::to_string(q), "ratio >= " + short_number(floor),
                   "min margin " + short_number(worst), "exact", fails == 0, since(start)});
  }
  return out;
}

std::vector<CheckResult> convexity_checks() {
  std::vector<CheckResult> out;
  auto start = Clock::now();
  const std::vector<double> betas{-0.2, 0.0, 0.5, 1.0, 2.0};
  std::vector<double> ts;
  for (double b : betas) ts.push_back(solve_t(b, 1e-11).t);
  double worst = kInfinity;
  for (std::size_t i = 1; i + 1 < betas.size(); ++i) {
    const double w = (betas[i] - betas[i - 1]) / (betas[i + 1] - betas[i - 1]);
    const double chord = ts[i - 1] + w * (ts[i + 1] - ts[i - 1]);
    worst = std::min(worst, chord - ts[i]);
  }
  out.push_back({"t_convexity", "chord - t > 1e-6", short_number(worst), "1e-06", worst > 1e-6,
                 since(start)});

  start = Clock::now();
  std::vector<double> grid;
  for (int i = 0; i < 21; ++i) grid.push_back(0.05 + 0.045 * i);
  const auto curve = spectrum_curve(grid, 1e-10);
  worst = kInfinity;
  bool complete = true;
  for (const auto& p : curve) complete = complete && !p.failure;
  for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
    worst = std::min(worst, curve[i].f - 0.5 * (curve[i - 1].f + curve[i + 1].f));
  }
  out.push_back({"f_concavity", "f(mid) - chord > 1e-6 on 21 points", short_number(worst), "1e-06",
                 complete && worst > 1e-6, since(start)});
  return out;
}

}  // namespace

std::vector<Criterion> criteria() {
  const auto make = [](int number, std::string name, std::vector<CheckResult> (*fn)()) {
    std::string id = name;
    return Criterion{number, std::move(name), [id, fn] { return guarded(id, fn); }};
  };
  return {
      make(1, "alpha0", alpha0_check),
      make(2, "t_at_zero", t_at_zero_check),
      make(3, "spectrum_apex", apex_checks),
      make(4, "t_prime_zero", t_prime_checks),
      make(5, "zeta_slice", zeta_slice_checks),
      make(6, "finiteness", finiteness_checks),
      make(7, "sandwich", sandwich_checks),
      make(8, "oracle_equivalence", oracle_checks),
      make(9, "monotone_pressure", slope_checks),
      make(10, "endpoint_values", endpoint_checks),
      make(11, "ramharter_trend", ramharter_checks),
      make(12, "epsilon_lemma", epsilon_checks),
      make(13, "identity_suite", identity_checks),
      make(14, "convexity_concavity", convexity_checks),
  };
}

}  // namespace agscale::cli
