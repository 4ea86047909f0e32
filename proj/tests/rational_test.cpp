#include "harmony/rational.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "harmony/errors.hpp"

namespace harmony {
namespace {

// Smallest denominator b with some integer a/b in [(1-p)x, (1+p)x], smallest
// a for that b. Same floating-point comparisons as the search under test.
Fraction brute_force_simplest(double x, double p) {
  const double lo = (1.0 - p) * x;
  const double hi = (1.0 + p) * x;
  for (std::int64_t b = 1;; ++b) {
    const double bd = static_cast<double>(b);
    auto a = static_cast<std::int64_t>(std::ceil(lo * bd));
    if (a < 1) a = 1;
    while (static_cast<double>(a) < lo * bd) ++a;
    if (static_cast<double>(a) <= hi * bd) return Fraction(a, b);
  }
}

std::int64_t brute_force_lcm(const std::vector<std::int64_t>& values) {
  for (std::int64_t m = 1;; ++m) {
    bool all = true;
    for (std::int64_t v : values) all = all && m % v == 0;
    if (all) return m;
  }
}

TEST(FractionTest, ReducesOnConstruction) {
  const Fraction f(6, 4);
  EXPECT_EQ(f.numerator(), 3);
  EXPECT_EQ(f.denominator(), 2);
  EXPECT_EQ(f.to_string(), "3/2");
  EXPECT_EQ(Fraction::integer(5).to_string(), "5/1");
}

TEST(FractionTest, RejectsNonPositiveParts) {
  EXPECT_THROW(Fraction(0, 1), UsageError);
  EXPECT_THROW(Fraction(1, 0), UsageError);
  EXPECT_THROW(Fraction(-3, 2), UsageError);
}

TEST(FractionTest, ArithmeticAndOrdering) {
  const Fraction a(3, 2);
  const Fraction b(4, 3);
  EXPECT_EQ(a * b, Fraction(2, 1));
  EXPECT_EQ(a / b, Fraction(9, 8));
  EXPECT_EQ(a + b, Fraction(17, 6));
  EXPECT_LT(b, a);
  EXPECT_GT(Fraction(16, 15), Fraction(17, 16));
}

TEST(FractionTest, Parse) {
  EXPECT_EQ(Fraction::parse("45/32"), Fraction(45, 32));
  EXPECT_EQ(Fraction::parse("3"), Fraction(3, 1));
  EXPECT_THROW(Fraction::parse("3/"), ParseError);
  EXPECT_THROW(Fraction::parse("a/2"), ParseError);
  EXPECT_THROW(Fraction::parse("0/2"), UsageError);
}

TEST(CheckedArithmeticTest, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  EXPECT_THROW(checked_mul(big, 2), OverflowError);
  EXPECT_THROW(checked_add(std::numeric_limits<std::int64_t>::max(), 1), OverflowError);
  EXPECT_THROW(checked_pow(3, 41), OverflowError);
  EXPECT_EQ(checked_pow(3, 12), 531441);
}

TEST(LcmTest, Examples) {
  const std::vector<std::int64_t> tritone_chord{1, 4, 3, 32};
  EXPECT_EQ(lcm_many(tritone_chord), 96);
  EXPECT_EQ(lcm(4, 6), 12);
  EXPECT_THROW(lcm_many(std::vector<std::int64_t>{}), UsageError);
  EXPECT_THROW(lcm_many(std::vector<std::int64_t>{3, 0}), UsageError);
}

TEST(LcmTest, AgreesWithBruteForce) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::int64_t> value(1, 40);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> values(static_cast<std::size_t>(count(rng)));
    for (auto& v : values) v = value(rng);
    EXPECT_EQ(lcm_many(values), brute_force_lcm(values));
  }
}

TEST(ApproximateTest, Examples) {
  EXPECT_EQ(approximate(1.414214, 0.01).result, Fraction(17, 12));
  EXPECT_EQ(approximate(std::pow(2.0, 1.0 / 12.0), 0.01).result, Fraction(16, 15));
  EXPECT_EQ(approximate(5.0, 0.01).result, Fraction(5, 1));
  EXPECT_EQ(approximate(1.5, 0.001).result, Fraction(3, 2));
  EXPECT_EQ(approximate(1.005, 0.01).result, Fraction(1, 1));
}

TEST(ApproximateTest, TraceEndsAtResult) {
  const ApproximationTrace trace = approximate(std::sqrt(2.0), 0.001);
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps.back().mediant, trace.result);
  EXPECT_LE(std::fabs(trace.result.to_double() / std::sqrt(2.0) - 1.0), 0.001);
}

TEST(ApproximateTest, RejectsInvalidArguments) {
  EXPECT_THROW(approximate(0.0, 0.01), UsageError);
  EXPECT_THROW(approximate(-1.0, 0.01), UsageError);
  EXPECT_THROW(approximate(1.0, 0.0), UsageError);
  EXPECT_THROW(approximate(1.0, 1.0), UsageError);
  EXPECT_THROW(approximate(std::nan(""), 0.01), UsageError);
}

TEST(ApproximateTest, MinimalDenominatorAgainstBruteForce) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> log_x(-3.0, 4.0);
  std::uniform_real_distribution<double> log_p(-4.0, -1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = std::exp(log_x(rng));
    const double p = std::pow(10.0, log_p(rng));
    const Fraction got = approximate(x, p).result;
    const Fraction want = brute_force_simplest(x, p);
    // Several integers may fit; only the denominator is unique.
    ASSERT_EQ(got.denominator(), want.denominator()) << "x=" << x << " p=" << p;
    const double value = static_cast<double>(got.numerator()) / static_cast<double>(got.denominator());
    EXPECT_GE(value, (1.0 - p) * x * (1.0 - 1e-15));
    EXPECT_LE(value, (1.0 + p) * x * (1.0 + 1e-15));
    if (want.denominator() > 1) {
      EXPECT_EQ(got, want);
    }
  }
}

TEST(ApproximateTest, ExactOverloadMatchesDoubleOnRationalInputs) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> part(1, 999);
  for (int trial = 0; trial < 300; ++trial) {
    const Fraction x(part(rng), part(rng));
    const Fraction p(1, 100);
    const Fraction exact = approximate(x, p).result;
    EXPECT_LE(std::fabs(exact.to_double() / x.to_double() - 1.0), 0.01 + 1e-12);
    EXPECT_EQ(exact.denominator(), brute_force_simplest(x.to_double(), 0.01).denominator())
        << x.to_string();
  }
}

TEST(MediantSequenceTest, FifthInOctaves) {
  const std::vector<Fraction> seq = mediant_sequence(std::log2(1.5), 5);
  const std::vector<Fraction> want{Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(4, 7),
                                   Fraction(7, 12)};
  EXPECT_EQ(seq, want);
}

TEST(MediantSequenceTest, StopsOnExactHit) {
  const std::vector<Fraction> seq = mediant_sequence(Fraction(3, 5), 10);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq.back(), Fraction(3, 5));
  EXPECT_THROW(mediant_sequence(1.5, 3), UsageError);
}

TEST(PrimeFactorsTest, Factorizes) {
  EXPECT_TRUE(prime_factors(1).empty());
  const std::vector<PrimePower> f360{{2, 3}, {3, 2}, {5, 1}};
  EXPECT_EQ(prime_factors(360), f360);
  const std::vector<PrimePower> f97{{97, 1}};
  EXPECT_EQ(prime_factors(97), f97);
  EXPECT_THROW(prime_factors(0), UsageError);
}

}  // namespace
}  // namespace harmony
