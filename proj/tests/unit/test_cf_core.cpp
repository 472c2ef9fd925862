#include <agscale/cf_core.hpp>
#include <agscale/errors.hpp>

#include <cmath>
#include <random>

#include <gtest/gtest.h>

using namespace agscale;

namespace {

// log of a big integer: keep the top 60 bits, count the rest as powers of two.
double bigint_log(const BigInt& x) {
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

DigitWord random_word(std::mt19937_64& rng, std::size_t max_len, Digit lo, Digit hi) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<Digit> dig(lo, hi);
  std::vector<Digit> d(len(rng));
  for (auto& x : d) x = dig(rng);
  return DigitWord(std::move(d));
}

}  // namespace

TEST(DigitWord, RejectsZeroDigitsAndEmptyWords) {
  EXPECT_THROW(DigitWord(std::vector<Digit>{}), DomainError);
  EXPECT_THROW((DigitWord{1, 0, 2}), DomainError);
  EXPECT_NO_THROW((DigitWord{1, 2, 3}));
}

TEST(Convergents, FibonacciDenominators) {
  const auto c = convergents(constant_word(1, 5));
  const int expected[] = {1, 2, 3, 5, 8};
  ASSERT_EQ(c.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(c[i].q, expected[i]);
}

TEST(Convergents, TwoStepWordAndDeterminant) {
  const auto c = convergents(DigitWord{1, 2});
  EXPECT_EQ(c[1].p, 2);
  EXPECT_EQ(c[1].q, 3);
  EXPECT_EQ(c[0].p * c[1].q - c[1].p * c[0].q, 1);
}

TEST(Convergents, ConstantTwos) {
  const auto c = convergents(constant_word(2, 3));
  EXPECT_EQ(c[0].q, 2);
  EXPECT_EQ(c[1].q, 5);
  EXPECT_EQ(c[2].q, 12);
}

TEST(Convergents, RandomWordsSatisfyRecursionDeterminantAndGcd) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const DigitWord w = random_word(rng, 40, 1, 1000);
    const auto c = convergents(w);
    BigInt p_prev = 0, q_prev = 1, q_prev2 = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      EXPECT_EQ(c[k].q, BigInt(w[k]) * q_prev + q_prev2);
      const int sign = (k + 1) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(p_prev * c[k].q - c[k].p * q_prev, sign);
      EXPECT_EQ(boost::multiprecision::gcd(c[k].p, c[k].q), 1);
      q_prev2 = q_prev;
      p_prev = c[k].p;
      q_prev = c[k].q;
    }
  }
}

TEST(LogQTrace, MatchesBigIntegerOracle) {
  const auto ones = log_q_trace(constant_word(1, 20));
  EXPECT_NEAR(ones.back().log_q, std::log(10946.0), 1e-12 * std::log(10946.0));

  const DigitWord w{3, 1, 4, 1, 5};
  const auto tr = log_q_trace(w);
  const double exact = bigint_log(convergents(w).back().q);
  EXPECT_NEAR(tr.back().log_q, exact, 1e-12 * exact);
}

TEST(LogQTrace, SingleDigitBaseCase) {
  const auto tr = log_q_trace(DigitWord{7});
  EXPECT_DOUBLE_EQ(tr[0].log_q, std::log(7.0));
  EXPECT_DOUBLE_EQ(tr[0].q_ratio, 1.0 / 7.0);
}

TEST(LogQTrace, LongRandomWordsStayWithinRelativeTolerance) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::uniform_int_distribution<Digit> dig(1, 50);
    std::vector<Digit> d(10000);
    for (auto& x : d) x = dig(rng);
    const DigitWord w(std::move(d));
    const auto tr = log_q_trace(w);
    const auto c = convergents(w);
    for (std::size_t n : {std::size_t{1}, std::size_t{100}, std::size_t{5000}, std::size_t{10000}}) {
      const double exact = bigint_log(c[n - 1].q);
      if (exact == 0.0) continue;
      EXPECT_NEAR(tr[n - 1].log_q, exact, 1e-12 * exact) << "n=" << n;
    }
  }
}

TEST(LogState, AdvanceMatchesTrace) {
  const DigitWord w{2, 7, 1, 8, 2, 8};
  LogState s;
  const auto tr = log_q_trace(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    s = s.advance(w[i]);
    EXPECT_NEAR(s.log_q, tr[i].log_q, 1e-14);
    EXPECT_GT(s.ratio, 0.0);
    EXPECT_LE(s.ratio, 1.0);
  }
}

TEST(ScalingRatio, AllOnesIsZeroAndSingleOneIsRejected) {
  EXPECT_EQ(scaling_ratio(constant_word(1, 30)), 0.0);
  EXPECT_THROW(scaling_ratio(DigitWord{1}), DomainError);
}

TEST(ScalingRatio, ConstantWordsApproachAlphaOfK) {
  for (Digit k : {Digit{2}, Digit{3}, Digit{10}}) {
    EXPECT_NEAR(scaling_ratio(constant_word(k, 4000)), alpha_of_k(k), 1e-3) << k;
  }
}

TEST(ScalingRatio, RestrictedWordsRespectFloor) {
  std::mt19937_64 rng(13);
  for (Digit q : {Digit{3}, Digit{10}, Digit{100}}) {
    const double floor = restricted_scaling_floor(q);
    EXPECT_GE(scaling_ratio(constant_word(q, 200)), floor);
    for (int i = 0; i < 200; ++i) {
      EXPECT_GE(scaling_ratio(random_word(rng, 50, q, 3 * q)), floor);
    }
  }
}

TEST(ScalingRatio, StaysInUnitIntervalWithSandwichSlack) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const DigitWord w = random_word(rng, 30, 1, 200);
    for (const auto& row : log_q_trace(w)) {
      if (std::isnan(row.ratio)) continue;
      EXPECT_GE(row.ratio, 0.0);
      EXPECT_LE(row.ratio, 1.0 + std::log(2.0) * row.n / row.log_q);
    }
  }
}

TEST(Cylinders, DiameterFormula) {
  EXPECT_EQ(cylinder_diameter(DigitWord{1}), Rational(1, 2));
  EXPECT_EQ(cylinder_diameter(DigitWord{1, 2}), Rational(1, 12));
  const auto iv = cylinder_interval(DigitWord{1, 2});
  EXPECT_EQ(iv.left, Rational(2, 3));
  EXPECT_EQ(iv.right, Rational(3, 4));
  EXPECT_EQ(iv.right - iv.left, cylinder_diameter(DigitWord{1, 2}));
}

TEST(Cylinders, FirstLevelDiametersSumToOne) {
  Rational sum = 0;
  constexpr int n = 500;
  for (Digit a = 1; a <= n; ++a) sum += cylinder_diameter(DigitWord{a});
  EXPECT_EQ(sum, Rational(n, n + 1));
}

TEST(Cylinders, DiameterComparableToInverseSquare) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    const DigitWord w = random_word(rng, 20, 1, 50);
    const BigInt q = convergents(w).back().q;
    const Rational d = cylinder_diameter(w);
    EXPECT_LE(Rational(BigInt(1), 2 * q * q), d);
    EXPECT_LE(d, Rational(BigInt(1), q * q));
  }
}

TEST(Bounds, SandwichAndRefinedLowerEstimate) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const DigitWord w = random_word(rng, 50, 1, 100);
    const BigInt q = convergents(w).back().q;
    const BigInt prod = digit_product(w);
    EXPECT_LE(prod, q);
    EXPECT_LE(q, prod << w.size());
    EXPECT_LE(refined_denominator_bound(w), Rational(q));
  }
}

TEST(ExpandReal, RationalTerminates) {
  const Expansion e = expand_real(RealEnclosure::exact(Rational(2, 3)), 10);
  EXPECT_EQ(e.digits, (std::vector<Digit>{1, 2}));
  EXPECT_TRUE(e.terminated);
}

TEST(ExpandReal, QuadraticSurds) {
  const Expansion root2 = expand_real(enclose_surd(2, -1, 1, 256), 60);
  EXPECT_EQ(root2.digits, std::vector<Digit>(60, 2));
  EXPECT_FALSE(root2.terminated);
  const Expansion golden = expand_real(enclose_surd(5, -1, 2, 256), 100);
  EXPECT_EQ(golden.digits, std::vector<Digit>(100, 1));
  const Expansion seven = expand_real(enclose_surd(53, -7, 2, 256), 30);
  EXPECT_EQ(seven.digits, std::vector<Digit>(30, 7));
}

TEST(ExpandReal, PrecisionExhaustionNamesTheCertainPrefix) {
  try {
    expand_real(enclose_surd(5, -1, 2, 40), 200);
    FAIL() << "expected PrecisionExhausted";
  } catch (const PrecisionExhausted& e) {
    EXPECT_GT(e.certain_prefix(), 10u);
    EXPECT_LT(e.certain_prefix(), 200u);
    // the certified prefix really is all ones
    const Expansion ok = expand_real(enclose_surd(5, -1, 2, 40), e.certain_prefix());
    EXPECT_EQ(ok.digits, std::vector<Digit>(e.certain_prefix(), 1));
  }
}

TEST(ExpandReal, RejectsOutOfRange) {
  EXPECT_THROW(expand_real(RealEnclosure::exact(Rational(3, 2)), 3), DomainError);
  EXPECT_THROW(expand_real(RealEnclosure::exact(Rational(0)), 3), DomainError);
}

TEST(AlphaOfK, ClosedFormValues) {
  EXPECT_EQ(alpha_of_k(1), 0.0);
  EXPECT_NEAR(alpha_of_k(2), 0.786439701357394884684, 1e-15);
  double prev = alpha_of_k(2);
  for (Digit k = 3; k <= 2000; ++k) {
    const double a = alpha_of_k(k);
    EXPECT_GT(a, prev);
    EXPECT_LT(a, 1.0);
    prev = a;
  }
}
