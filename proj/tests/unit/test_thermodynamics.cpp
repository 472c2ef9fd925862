#include <agscale/errors.hpp>
#include <agscale/special_functions.hpp>
#include <agscale/thermodynamics.hpp>

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

using namespace agscale;

namespace {
const double kLogGolden = std::log((1.0 + std::sqrt(5.0)) / 2.0);
constexpr double kAlpha0 = 0.832525512557622536227035138941;
}  // namespace

TEST(FreeEnergy, GaussMapAtZero) {
  const FreeEnergySample s = solve_t(0.0, 1e-11);
  EXPECT_NEAR(s.t, 1.0, 1e-9);
  EXPECT_NEAR(s.derivative, -kAlpha0, 1e-5);
}

TEST(FreeEnergy, ZetaSliceBound) {
  // P(0, 5) = log zeta(10) and dP/dt <= -2 log(golden), so 0 < t(5) <= log zeta(10) / (2 log golden)
  const double t5 = solve_t(5.0, 1e-12).t;
  EXPECT_GT(t5, 0.0);
  EXPECT_LE(t5, std::log(zeta(10.0, 1e-15).value) / (2.0 * kLogGolden));
}

TEST(FreeEnergy, DecreasingAndConvex) {
  const double betas[] = {-0.5, -0.2, 0.0, 0.3, 0.6, 1.0};
  double prev = INFINITY;
  for (double b : betas) {
    const double t = solve_t(b, 1e-11).t;
    EXPECT_LT(t, prev);
    prev = t;
  }
  const double mid = solve_t(0.25, 1e-11).t;
  const double chord = 0.5 * (solve_t(0.0, 1e-11).t + solve_t(0.5, 1e-11).t);
  EXPECT_GT(chord - mid, 1e-6);
}

TEST(FreeEnergy, DerivativeRoutesAgree) {
  EXPECT_NEAR(t_prime(0.0), -alpha0(1e-12), 1e-6);
  const FreeEnergySample s = solve_t(0.7, 1e-11);
  EXPECT_NEAR(t_prime(0.7), s.derivative, 1e-5);
  EXPECT_GT(-s.derivative, 0.0);
  EXPECT_LT(-s.derivative, 1.0);
}

TEST(Spectrum, ApexAtAlmostSureExponent) {
  const SpectrumPoint p = spectrum_point(kAlpha0);
  EXPECT_NEAR(p.f, 1.0, 1e-6);
  EXPECT_NEAR(p.beta, 0.0, 1e-2);
  EXPECT_LE(p.error, 1e-6);
}

TEST(Spectrum, EndpointsAndEmptyLevelSets) {
  EXPECT_EQ(spectrum_point(0.0).f, 0.0);
  EXPECT_EQ(spectrum_point(1.0).f, 0.5);
  const SpectrumPoint out = spectrum_point(1.2);
  EXPECT_TRUE(out.empty_level_set);
  EXPECT_EQ(out.f, 0.0);
  EXPECT_TRUE(spectrum_point(-0.1).empty_level_set);
}

TEST(Spectrum, LegendreConsistency) {
  for (double a : {0.3, 0.6, 0.9}) {
    const SpectrumPoint p = spectrum_point(a);
    EXPECT_NEAR(p.f, p.t + p.beta * a, 1e-12);
    EXPECT_NEAR(t_prime(p.beta), -a, 1e-5) << a;
    EXPECT_GT(p.f, 0.0);
    EXPECT_LT(p.f, 1.0);
  }
}

TEST(Spectrum, CurveRecordsPointwise) {
  const auto curve = spectrum_curve({0.2, 0.5, 0.8});
  ASSERT_EQ(curve.size(), 3u);
  for (const auto& p : curve) EXPECT_FALSE(p.failure.has_value());
  EXPECT_LT(curve[0].f, curve[1].f);
  EXPECT_LT(curve[1].f, curve[2].f);
}

TEST(RestrictedDimension, MonotoneAndAboveOneHalf) {
  double prev = 1.0;
  for (std::int64_t q : {2, 4, 8, 16}) {
    const double d = dim_Iq(q, 1e-10);
    EXPECT_LT(d, prev);
    EXPECT_GT(d, 0.5);
    prev = d;
  }
}

TEST(RestrictedDimension, FirstLevelSandwich) {
  // sum_{k>q} k^{-2d} <= 1 <= sum_{k>=q} k^{-2d} at d = dim I_q
  for (std::int64_t q : {2, 10, 100}) {
    const double d = dim_Iq(q, 1e-10);
    const double s = 2.0 * d;
    const double upper = zeta_tail(s, static_cast<double>(q)).value;
    const double lower = zeta_tail(s, static_cast<double>(q + 1)).value;
    EXPECT_LE(lower, 1.0) << q;
    EXPECT_GE(upper, 1.0) << q;
  }
}

TEST(RestrictedDimension, RamharterRatioDomain) {
  EXPECT_THROW(ramharter_ratio(2), DomainError);
  const double r = ramharter_ratio(100);
  EXPECT_GT(r, 0.0);
  EXPECT_LT(r, 1.0);
}

TEST(EpsilonLemma, BoundsEncloseExactFiniteSum) {
  const double eps = 0.45;
  const EpsilonLemmaReport r = verify_epsilon_lemma(eps);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.sum_A + r.sum_B, 1.0);
  EXPECT_NEAR(r.N, std::pow(eps / 3.0, -2.0 / eps), 1e-9 * r.N);
  const auto n = static_cast<long>(std::floor(r.N));
  double exact = 0.0;
  for (long k = 1; k <= n; ++k) {
    double row = 0.0;
    for (long l = 1; l <= n; ++l) {
      const double kd = static_cast<double>(k), ld = static_cast<double>(l);
      row += std::exp(-(1.0 + eps) * std::log(kd * ld) +
                      2.0 * r.beta_eps * std::log1p(1.0 / (kd * (ld + 1.0))));
    }
    exact += row;
  }
  EXPECT_GE(exact, r.sum_B_lower * (1 - 1e-9));
  EXPECT_LE(exact, r.sum_B * (1 + 1e-9));
}

TEST(EpsilonLemma, Domain) {
  EXPECT_THROW(verify_epsilon_lemma(0.6), DomainError);
  EXPECT_THROW(verify_epsilon_lemma(0.0), DomainError);
}

TEST(Boundary, DomainAndFlags) {
  EXPECT_THROW(boundary_asymptotic_check({0.6}), DomainError);
  const BoundaryReport r = boundary_asymptotic_check({0.4, 0.05});
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(r.rows[0].failure.has_value());
  EXPECT_FALSE(r.rows[1].failure.has_value());
  EXPECT_NEAR(r.rows[1].ratio, 1.227, 5e-3);
  EXPECT_TRUE(r.rows[1].in_band);
}
