#include <agscale/errors.hpp>
#include <agscale/special_functions.hpp>
#include <agscale/transfer_operator.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

using namespace agscale;

namespace {

OperatorSpec spec(double t, double beta, AlphabetSpec alphabet, int degree = 16) {
  OperatorSpec s;
  s.t = t;
  s.beta = beta;
  s.alphabet = alphabet;
  s.degree = degree;
  return s;
}

}  // namespace

TEST(TransferOperator, NodesAreChebyshevLobattoOnUnitInterval) {
  const TransferOperator op(spec(1.0, 0.0, AlphabetSpec::truncated(10), 8));
  ASSERT_EQ(op.size(), 9);
  const auto x = op.nodes();
  EXPECT_NEAR(std::min(x.front(), x.back()), 0.0, 1e-15);
  EXPECT_NEAR(std::max(x.front(), x.back()), 1.0, 1e-15);
  for (int j = 0; j < 9; ++j) {
    const double c = 0.5 * (1.0 - std::cos(std::numbers::pi * j / 8.0));
    bool found = false;
    for (double v : x) found = found || std::abs(v - c) < 1e-14;
    EXPECT_TRUE(found) << j;
  }
}

TEST(TransferOperator, InterpolationReproducesPolynomials) {
  const TransferOperator op(spec(1.0, 0.0, AlphabetSpec::truncated(10), 12));
  std::vector<double> samples;
  for (double x : op.nodes()) samples.push_back(3 * x * x * x - x + 0.5);
  for (double x : {0.0, 0.123, 0.5, 0.77, 1.0}) {
    EXPECT_NEAR(interpolate(samples, x), 3 * x * x * x - x + 0.5, 1e-13);
  }
}

TEST(TransferOperator, ConstantMapsToHurwitzZeta) {
  const TransferOperator op(spec(1.0, 0.0, AlphabetSpec::full(200)));
  const std::vector<double> one(static_cast<std::size_t>(op.size()), 1.0);
  const auto out = op.apply(one);
  const auto nodes = op.nodes();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double z2 = std::numbers::pi * std::numbers::pi / 6.0;
    if (nodes[i] == 0.0) {
      EXPECT_NEAR(out[i], z2, 1e-10);
    } else if (nodes[i] == 1.0) {
      EXPECT_NEAR(out[i], z2 - 1.0, 1e-10);
    }
  }
}

TEST(TransferOperator, GaussDensityIsFixed) {
  const TransferOperator op(spec(1.0, 0.0, AlphabetSpec::full(200)));
  std::vector<double> h;
  for (double x : op.nodes()) h.push_back(1.0 / (1.0 + x));
  const auto out = op.apply(h);
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_NEAR(out[i], h[i], 1e-10);
}

TEST(TransferOperator, ApplyRejectsBadInput) {
  const TransferOperator op(spec(1.0, 0.0, AlphabetSpec::truncated(10), 8));
  std::vector<double> f(9, 1.0);
  f[3] = NAN;
  EXPECT_THROW(op.apply(f), DomainError);
  EXPECT_THROW(op.apply(std::vector<double>(4, 1.0)), DomainError);
}

TEST(OperatorSpec, Validation) {
  EXPECT_THROW(spec(1.0, 0.0, AlphabetSpec::full(100), 3).validate(), DomainError);
  EXPECT_THROW(spec(0.25, 0.25, AlphabetSpec::full(100)).validate(), DomainError);
  EXPECT_NO_THROW(spec(0.25, 0.25, AlphabetSpec::truncated(100)).validate());
  EXPECT_THROW(leading_eigenvalue(spec(1.0, 0.0, AlphabetSpec::truncated(10)), 0.0), DomainError);
}

TEST(LeadingEigenvalue, GaussMapHasEigenvalueOne) {
  const EigenResult r = leading_eigenvalue(spec(1.0, 0.0, AlphabetSpec::full(200)), 1e-13);
  EXPECT_NEAR(r.log_lambda, 0.0, 1e-10);
  EXPECT_LE(r.residual, 1e-12);
  for (double v : r.eigenfunction) EXPECT_GT(v, 0.0);
  // eigenfunction proportional to 1/(1+x): h(0)/h(1) = 2
  EXPECT_NEAR(interpolate(r.eigenfunction, 0.0) / interpolate(r.eigenfunction, 1.0), 2.0, 1e-9);
}

TEST(LeadingEigenvalue, TimeZeroReducesToZeta) {
  for (double beta : {0.75, 1.0, 2.0}) {
    const EigenResult r = leading_eigenvalue(spec(0.0, beta, AlphabetSpec::full(500)), 1e-13);
    EXPECT_NEAR(r.log_lambda, std::log(zeta(2.0 * beta, 1e-14).value), 1e-9) << beta;
  }
}

TEST(LeadingEigenvalue, ConvergesInDegree) {
  const double d8 = leading_eigenvalue(spec(0.8, 0.3, AlphabetSpec::full(200), 8), 1e-13).log_lambda;
  const double d16 = leading_eigenvalue(spec(0.8, 0.3, AlphabetSpec::full(200), 16), 1e-13).log_lambda;
  const double d24 = leading_eigenvalue(spec(0.8, 0.3, AlphabetSpec::full(200), 24), 1e-13).log_lambda;
  EXPECT_NEAR(d16, d24, 1e-11);
  EXPECT_NEAR(d8, d24, 1e-7);
}

TEST(PressureViaOperator, TruncationIsMonotoneAndBracketed) {
  double prev = -INFINITY;
  const double full = pressure_via_operator(1.2, 0.1, AlphabetSpec::full(1000), 1e-12).value;
  for (std::int64_t m : {5, 50, 500}) {
    const PressureEstimate p = pressure_via_operator(1.2, 0.1, AlphabetSpec::truncated(m), 1e-12);
    EXPECT_GT(p.value, prev);
    EXPECT_LT(p.value, full);
    EXPECT_LE(p.lower, p.value);
    // the cut-off bound must cover the gap to the infinite alphabet
    EXPECT_GE(p.upper, full - 1e-10) << m;
    prev = p.value;
  }
}

TEST(PressureViaOperator, ExplicitDigitCountDoesNotMatterWithTailFold) {
  const double a = pressure_via_operator(0.9, 0.0, AlphabetSpec::full(100), 1e-12).value;
  const double b = pressure_via_operator(0.9, 0.0, AlphabetSpec::full(2000), 1e-12).value;
  EXPECT_NEAR(a, b, 1e-10);
}
