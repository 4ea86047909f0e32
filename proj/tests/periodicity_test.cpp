#include "harmony/periodicity.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "harmony/enumeration.hpp"
#include "harmony/errors.hpp"

namespace harmony {
namespace {

// Just intonation ratios, written out independently of the library table.
const std::pair<std::int64_t, std::int64_t> kJust[12] = {
    {1, 1}, {16, 15}, {9, 8}, {6, 5}, {5, 4}, {4, 3}, {7, 5}, {3, 2}, {8, 5}, {5, 3}, {9, 5}, {15, 8}};

// Smallest m > 0 with m * a/b integral for every tone.
std::int64_t brute_force_period(const std::vector<int>& tones) {
  for (std::int64_t m = 1;; ++m) {
    bool whole = true;
    for (int t : tones) {
      const auto [a, b] = kJust[t % 12];
      whole = whole && (m * a) % b == 0;
    }
    if (whole) return m;
  }
}

TEST(HarmonyTest, Invariants) {
  EXPECT_THROW(Harmony({}), UsageError);
  EXPECT_THROW(Harmony({1, 4}), UsageError);
  EXPECT_THROW(Harmony({0, 4, 4}), UsageError);
  EXPECT_THROW(Harmony({0, 7, 4}), UsageError);
  EXPECT_EQ(Harmony({0, 4, 7}).to_string(), "0,4,7");
}

TEST(HarmonyTest, FromPitches) {
  EXPECT_EQ(Harmony::from_pitches({67, 60, 64}), Harmony({0, 4, 7}));
  EXPECT_EQ(Harmony::from_pitches({-3, 0, 6}), Harmony({0, 3, 9}));
  EXPECT_THROW(Harmony::from_pitches({60, 60}), UsageError);
}

TEST(HarmonyTest, ReducedToOctave) {
  EXPECT_EQ(Harmony({0, 16, 19}).reduced_to_octave(), Harmony({0, 4, 7}));
  EXPECT_EQ(Harmony({0, 12}).reduced_to_octave(), Harmony({0}));
}

TEST(PeriodicityTest, DiminishedFirstInversion) {
  const AnalysisResult r = analyze(Harmony({0, 3, 9}), builtin_tuning("just"));
  EXPECT_EQ(r.raw_h, 15);
  const std::vector<Fraction> want{Fraction(15, 1), Fraction(25, 1), Fraction(6, 1)};
  EXPECT_EQ(r.inversion_h, want);
  EXPECT_NEAR(r.mean_h, 46.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.mean_log_h, (std::log2(15.0) + std::log2(25.0) + std::log2(6.0)) / 3.0, 1e-12);
}

TEST(PeriodicityTest, MajorTriadSpreadOverOctaves) {
  const AnalysisResult r = analyze(Harmony({0, 16, 19}), builtin_tuning("just"));
  EXPECT_EQ(r.raw_h, 2);
  EXPECT_DOUBLE_EQ(r.mean_h, 2.0);
  EXPECT_DOUBLE_EQ(r.mean_log_h, 1.0);
}

TEST(PeriodicityTest, ChromaticScale) {
  std::vector<int> all(12);
  for (int i = 0; i < 12; ++i) all[static_cast<std::size_t>(i)] = i;
  const AnalysisResult r = analyze(Harmony(all), builtin_tuning("just"));
  EXPECT_EQ(r.raw_h, 120);
  EXPECT_NEAR(r.mean_h, 168.2, 0.05);
  EXPECT_NEAR(r.mean_log_h, 7.37, 0.005);
}

TEST(PeriodicityTest, MajorSeventhNinth) {
  const AnalysisResult r = analyze(Harmony({0, 2, 4, 7, 11}), builtin_tuning("just"));
  EXPECT_NEAR(r.mean_log_h, 3.751, 0.0005);
}

TEST(PeriodicityTest, InversionOffsets) {
  const Harmony h({0, 3, 9});
  EXPECT_EQ(inversion_offsets(h, 0), (std::vector<int>{0, 3, 9}));
  EXPECT_EQ(inversion_offsets(h, 1), (std::vector<int>{-3, 0, 6}));
  EXPECT_EQ(inversion_offsets(h, 2), (std::vector<int>{-9, -6, 0}));
}

TEST(PeriodicityTest, WithoutInversions) {
  const AnalysisResult r = analyze(Harmony({0, 3, 9}), builtin_tuning("just"), false);
  ASSERT_EQ(r.inversion_h.size(), 1u);
  EXPECT_DOUBLE_EQ(r.mean_h, 15.0);
  EXPECT_DOUBLE_EQ(r.mean_log_h, std::log2(15.0));
}

TEST(PeriodicityTest, SingleToneAndOctave) {
  EXPECT_EQ(raw_periodicity(Harmony({0}), builtin_tuning("just")), 1);
  const AnalysisResult octave = analyze(Harmony({0, 12}), builtin_tuning("just"));
  EXPECT_DOUBLE_EQ(octave.mean_h, 1.0);
}

TEST(PeriodicityTest, EqualTemperamentIsRejected) {
  EXPECT_THROW(analyze(Harmony({0, 4, 7}), builtin_tuning("equal")), TuningError);
}

TEST(PeriodicityTest, RawPeriodicityAgreesWithBruteForceOnAllHarmonies) {
  const TuningTable just = builtin_tuning("just");
  int checked = 0;
  for_each_harmony(std::nullopt, [&](const Harmony& h) {
    ASSERT_EQ(raw_periodicity(h, just), brute_force_period(h.semitones())) << h.to_string();
    ++checked;
  });
  EXPECT_EQ(checked, 2048);
}

TEST(PeriodicityTest, FundamentalFrequency) {
  EXPECT_NEAR(fundamental_frequency(Harmony({0, 4, 7}), builtin_tuning("just"), 440.0), 110.0, 1e-12);
}

}  // namespace
}  // namespace harmony
