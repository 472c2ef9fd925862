#include "agscale/transfer_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "agscale/errors.hpp"
#include "agscale/numerics.hpp"

namespace agscale {

namespace {

// Cut point and resolution of the substituted tail integral a = A e^y.
constexpr double kTailSpan = 40.0;
constexpr int kTailPanels = 40;
constexpr int kMaxIterations = 100000;

std::vector<double> lobatto_nodes(int degree) {
  std::vector<double> x(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) {
    x[static_cast<std::size_t>(j)] = 0.5 * (1.0 - std::cos(j * std::numbers::pi / degree));
  }
  return x;
}

std::vector<double> lobatto_weights(int degree) {
  std::vector<double> w(static_cast<std::size_t>(degree) + 1);
  for (int j = 0; j <= degree; ++j) w[static_cast<std::size_t>(j)] = (j % 2 == 0) ? 1.0 : -1.0;
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

// Lagrange basis l_k(u), k = 0..n-1, in barycentric form.
void lagrange_row(std::span<const double> x, std::span<const double> w, double u,
                  std::span<double> out) {
  const std::size_t n = x.size();
  double denom = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = u - x[k];
    if (d == 0.0) {
      std::fill(out.begin(), out.end(), 0.0);
      out[k] = 1.0;
      return;
    }
    out[k] = w[k] / d;
    denom += out[k];
  }
  for (std::size_t k = 0; k < n; ++k) out[k] /= denom;
}

// D[i][k] = l_k'(x_i).
std::vector<double> differentiation_matrix(std::span<const double> x, std::span<const double> w) {
  const std::size_t n = x.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      d[i * n + k] = w[k] / w[i] / (x[i] - x[k]);
      diag -= d[i * n + k];
    }
    d[i * n + i] = diag;
  }
  return d;
}

}  // namespace

void OperatorSpec::validate() const {
  alphabet.validate();
  if (degree < 4) throw DomainError("collocation degree must be >= 4");
  if (!std::isfinite(t) || !std::isfinite(beta)) throw DomainError("t and beta must be finite");
  if (alphabet.infinite() && !(2.0 * (t + beta) > 1.0)) {
    throw DomainError("infinite alphabet needs 2(t + beta) > 1; the operator diverges");
  }
}

double interpolate(std::span<const double> samples, double x) {
  if (samples.size() < 2) throw DomainError("need at least two samples");
  const int degree = static_cast<int>(samples.size()) - 1;
  const auto nodes = lobatto_nodes(degree);
  const auto bary = lobatto_weights(degree);
  std::vector<double> row(samples.size());
  lagrange_row(nodes, bary, x, row);
  CompensatedSum sum;
  for (std::size_t k = 0; k < samples.size(); ++k) sum.add(row[k] * samples[k]);
  return sum.value();
}

TransferOperator::TransferOperator(const OperatorSpec& spec) : spec_(spec) {
  spec_.validate();
  nodes_ = lobatto_nodes(spec_.degree);
  bary_ = lobatto_weights(spec_.degree);
  const std::size_t n = nodes_.size();
  const double t = spec_.t;
  const double beta = spec_.beta;
  const double s = 2.0 * (t + beta);
  const std::int64_t q = spec_.alphabet.min_digit;
  const std::int64_t m_digit = spec_.alphabet.truncation;
  const std::size_t count = static_cast<std::size_t>(spec_.alphabet.size());

  std::vector<double> log_a(count);
  for (std::size_t i = 0; i < count; ++i) log_a[i] = std::log(static_cast<double>(q + static_cast<std::int64_t>(i)));

  // log of the branch weight a^{-2 beta} (a + x_j)^{-2t}, row by row
  std::vector<double> log_w(n * count);
  log_scale_ = -kInfinity;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < count; ++i) {
      const double a = static_cast<double>(q + static_cast<std::int64_t>(i));
      const double lw = -2.0 * beta * log_a[i] - 2.0 * t * std::log(a + nodes_[j]);
      log_w[j * count + i] = lw;
      log_scale_ = std::max(log_scale_, lw);
    }
  }

  matrix_.assign(n * n, 0.0);
  std::vector<double> row(n);
  for (std::size_t j = 0; j < n; ++j) {
    double* out = matrix_.data() + j * n;
    // Smallest weights first, so the large ones are not swamped.
    for (std::size_t i = count; i-- > 0;) {
      const double a = static_cast<double>(q + static_cast<std::int64_t>(i));
      const double weight = std::exp(log_w[j * count + i] - log_scale_);
      if (weight == 0.0) continue;
      lagrange_row(nodes_, bary_, 1.0 / (a + nodes_[j]), row);
      for (std::size_t k = 0; k < n; ++k) out[k] += weight * row[k];
    }
  }

  const double m_real = static_cast<double>(m_digit);
  if (!spec_.alphabet.infinite()) {
    // sum_{a > M} sup_x a^{-2 beta} (a+x)^{-2t} <= M^{1-s}/(s-1) * max(1, (1 + 1/(M+1))^{-2t})
    if (s <= 1.0) {
      log_dropped_ = kInfinity;
    } else {
      double lead = (1.0 - s) * std::log(m_real) - std::log(s - 1.0);
      if (t < 0.0) lead += -2.0 * t * std::log1p(1.0 / (m_real + 1.0));
      log_dropped_ = lead - log_scale_;
    }
    return;
  }

  // Euler-Maclaurin fold of the digits a > M, anchored at A = M + 1/2:
  // sum g(a) = int_A^inf g + g'(A)/24 - 7 g'''(A)/5760 + ...
  const double anchor = m_real + 0.5;
  const QuadratureRule rule = composite_gauss_legendre(0.0, kTailSpan, kTailPanels);
  const auto diff = differentiation_matrix(nodes_, bary_);
  std::vector<double> at_zero(n);
  lagrange_row(nodes_, bary_, 0.0, at_zero);
  std::vector<double> integral(n);
  std::vector<double> slope(n);

  const double log_prefactor = (1.0 - s) * std::log(anchor) - log_scale_;
  double worst_remainder = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = nodes_[j];
    std::fill(integral.begin(), integral.end(), 0.0);
    for (std::size_t p = rule.nodes.size(); p-- > 0;) {
      const double y = rule.nodes[p];
      const double a = anchor * std::exp(y);
      const double factor =
          rule.weights[p] * std::exp(-(s - 1.0) * y - 2.0 * t * std::log1p(x / a));
      lagrange_row(nodes_, bary_, 1.0 / (a + x), row);
      for (std::size_t k = 0; k < n; ++k) integral[k] += factor * row[k];
    }
    const double beyond = std::exp(-(s - 1.0) * kTailSpan) / (s - 1.0);
    const double prefactor = std::exp(log_prefactor);

    const double u = 1.0 / (anchor + x);
    const double log_weight_at_anchor =
        -2.0 * beta * std::log(anchor) - 2.0 * t * std::log(anchor + x) - log_scale_;
    const double w_a = std::exp(log_weight_at_anchor);
    lagrange_row(nodes_, bary_, u, row);
    for (std::size_t k = 0; k < n; ++k) {
      double dl = 0.0;
      for (std::size_t i = 0; i < n; ++i) dl += row[i] * diff[i * n + k];
      slope[k] = dl;
    }
    const double l1 = -2.0 * beta / anchor - 2.0 * t / (anchor + x);
    const double l2 = 2.0 * beta / (anchor * anchor) + 2.0 * t / ((anchor + x) * (anchor + x));
    const double l3 = -4.0 * beta / std::pow(anchor, 3) - 4.0 * t / std::pow(anchor + x, 3);

    double* out = matrix_.data() + j * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double g1 = w_a * (l1 * row[k] - u * u * slope[k]);
      out[k] += prefactor * (integral[k] + at_zero[k] * beyond) + g1 / 24.0;
    }
    // the first omitted correction, for the weight alone
    const double w3 = w_a * std::abs(l3 + 3.0 * l1 * l2 + l1 * l1 * l1);
    worst_remainder = std::max(worst_remainder, 7.0 * w3 / 5760.0);
  }
  log_em_error_ = worst_remainder > 0.0 ? std::log(worst_remainder) : -kInfinity;
}

std::vector<double> TransferOperator::scaled_apply(std::span<const double> f) const {
  const std::size_t n = nodes_.size();
  std::vector<double> g(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double* row = matrix_.data() + j * n;
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += row[k] * f[k];
    g[j] = acc;
  }
  return g;
}

std::vector<double> TransferOperator::apply(std::span<const double> f) const {
  if (f.size() != nodes_.size()) throw DomainError("sample count does not match the node count");
  for (double v : f) {
    if (!std::isfinite(v)) throw DomainError("non-finite input sample");
  }
  auto g = scaled_apply(f);
  const double scale = std::exp(log_scale_);
  for (double& v : g) v *= scale;
  return g;
}

double TransferOperator::tail_bound(double log_lambda, double distortion) const {
  if (!spec_.alphabet.infinite()) {
    if (log_dropped_ == kInfinity) return kInfinity;
    // Collatz-Wielandt: lambda_full <= lambda + rho * dropped
    return std::log1p(distortion * std::exp(log_dropped_ + log_scale_ - log_lambda));
  }
  if (log_em_error_ == -kInfinity) return 0.0;
  return distortion * std::exp(log_em_error_ + log_scale_ - log_lambda);
}

EigenResult leading_eigenvalue(const TransferOperator& op, double tol) {
  if (!(tol > 0.0)) throw DomainError("eigenvalue tolerance must be positive");
  const std::size_t n = static_cast<std::size_t>(op.size());
  // Below a few ulps per row the residual is rounding noise.
  const double target = std::max(tol, 64.0 * std::numeric_limits<double>::epsilon());

  std::vector<double> f(n, 1.0);
  double mu = 0.0;
  double residual = kInfinity;
  int it = 0;
  for (; it < kMaxIterations; ++it) {
    std::vector<double> g = op.scaled_apply(f);
    const double norm = *std::max_element(g.begin(), g.end());
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw ConvergenceError("power iteration lost positivity", residual);
    }
    mu = norm;
    double diff = 0.0;
    for (std::size_t j = 0; j < n; ++j) diff = std::max(diff, std::abs(g[j] - mu * f[j]));
    residual = diff / mu;  // f has unit sup norm
    for (std::size_t j = 0; j < n; ++j) {
      f[j] = g[j] / norm;
      if (!(f[j] > 0.0)) throw ConvergenceError("power iteration lost positivity", residual);
    }
    if (residual <= target) break;
  }
  if (residual > target) {
    throw ConvergenceError("power iteration hit the iteration cap, residual " +
                               std::to_string(residual),
                           residual);
  }

  EigenResult out;
  out.log_lambda = std::log(mu) + op.log_scale();
  const double lo = *std::min_element(f.begin(), f.end());
  out.residual = residual;
  out.tail_bound = op.tail_bound(out.log_lambda, 1.0 / lo);
  out.eigenfunction = std::move(f);
  out.iterations = it + 1;
  return out;
}

EigenResult leading_eigenvalue(const OperatorSpec& spec, double tol) {
  return leading_eigenvalue(TransferOperator(spec), tol);
}

PressureEstimate pressure_via_operator(double t, double beta, const AlphabetSpec& alphabet,
                                       double tol, int degree) {
  const EigenResult eig = leading_eigenvalue(OperatorSpec{t, beta, alphabet, degree}, tol);
  PressureEstimate out;
  out.method = PressureMethod::kTransferOperator;
  out.depth_or_degree = degree;
  out.value = eig.log_lambda;
  // Truncation only removes mass, so the cut-off widens the upper side alone.
  out.lower = eig.log_lambda - eig.residual - (alphabet.infinite() ? eig.tail_bound : 0.0);
  out.upper = eig.log_lambda + eig.residual + eig.tail_bound;
  return out;
}

}  // namespace agscale
