#include "harmony/signal_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "harmony/enumeration.hpp"
#include "harmony/errors.hpp"

namespace harmony {
namespace {

// Time average of s(t) s(t + tau) over one second for s a sum of unit sines
// with arbitrary phases, by the trapezoid rule on a uniform grid.
double numeric_autocorrelation(const std::vector<double>& freqs, const std::vector<double>& phases,
                               double tau) {
  constexpr int kSamples = 40000;
  auto signal = [&](double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      s += std::sin(2.0 * std::numbers::pi * freqs[i] * t + phases[i]);
    }
    return s;
  };
  double sum = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double t = static_cast<double>(i) / kSamples;
    sum += signal(t) * signal(t + tau);
  }
  return sum / kSamples;
}

PeriodSearch within(double periods) {
  PeriodSearch search;
  search.horizon_periods = periods;
  return search;
}

TEST(ToneStackTest, Validation) {
  EXPECT_THROW(ToneStack({}), UsageError);
  EXPECT_THROW(ToneStack({0.0, 1.0}), UsageError);
  EXPECT_THROW(ToneStack({440.0, 220.0}), UsageError);
  const ToneStack s = ToneStack::from_harmony(Harmony({0, 4, 7}), builtin_tuning("just"), 200.0);
  EXPECT_EQ(s.frequencies(), (std::vector<double>{200.0, 250.0, 300.0}));
}

TEST(AutocorrelationTest, BoundedByValueAtZero) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> freq(50.0, 2000.0);
  std::uniform_real_distribution<double> lag(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> f(4);
    for (auto& x : f) x = freq(rng);
    std::sort(f.begin(), f.end());
    const ToneStack s(f);
    const double rho0 = autocorrelation(s, 0.0);
    EXPECT_DOUBLE_EQ(rho0, 2.0);
    EXPECT_LE(autocorrelation(s, lag(rng)), rho0 + 1e-12);
  }
}

TEST(AutocorrelationTest, PhaseIndependence) {
  const std::vector<double> freqs{220.0, 275.0, 330.0};
  const ToneStack stack(freqs);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (double tau : {0.0, 0.00123, 0.0045, 0.01, 0.0181818}) {
    const std::vector<double> phases{phase(rng), phase(rng), phase(rng)};
    EXPECT_NEAR(numeric_autocorrelation(freqs, phases, tau), autocorrelation(stack, tau), 1e-4)
        << "tau=" << tau;
  }
}

TEST(DetectPeriodTest, MajorTriad) {
  const ToneStack s = ToneStack::from_harmony(Harmony({0, 4, 7}), builtin_tuning("just"), 220.0);
  const auto tau = detect_period(s);
  ASSERT_TRUE(tau.has_value());
  EXPECT_NEAR(*tau, 4.0 / 220.0, 1e-9);
}

TEST(DetectPeriodTest, NoPeriodInsideShortHorizon) {
  const ToneStack s = ToneStack::from_harmony(Harmony({0, 1}), builtin_tuning("just"), 220.0);
  EXPECT_FALSE(detect_period(s, within(10.0)).has_value());
  EXPECT_TRUE(detect_period(s, within(16.0)).has_value());
}

TEST(DetectPeriodTest, IrrationalRatioHasNoPeriod) {
  const ToneStack s({220.0, 220.0 * std::sqrt(2.0)});
  EXPECT_FALSE(detect_period(s, within(20.0)).has_value());
}

TEST(DetectPeriodTest, SearchValidation) {
  const ToneStack s({220.0, 330.0});
  EXPECT_THROW(detect_period(s, within(0.5)), UsageError);
  EXPECT_THROW(detect_period(s, PeriodSearch{4.0, 1e-3}), UsageError);
}

TEST(DetectPeriodTest, AgreesWithLcmOnRandomHarmonies) {
  const TuningTable just = builtin_tuning("just");
  const std::vector<Harmony> all = enumerate_harmonies();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  constexpr double kF1 = 220.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Harmony& h = all[pick(rng)];
    const auto raw = static_cast<double>(raw_periodicity(h, just));
    const ToneStack s = ToneStack::from_harmony(h, just, kF1);
    const auto tau = detect_period(s, within(raw + 1.0));
    ASSERT_TRUE(tau.has_value()) << h.to_string();
    EXPECT_NEAR(*tau / (raw / kF1), 1.0, 1e-6) << h.to_string();
  }
}

}  // namespace
}  // namespace harmony
