#include "harmony/enumeration.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "harmony/errors.hpp"
#include "harmony/serialization.hpp"

namespace harmony {
namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

TEST(EnumerationTest, CategorySizes) {
  std::size_t total = 0;
  for (int k = 1; k <= 12; ++k) {
    EXPECT_EQ(category_size(k), binomial(11, k - 1));
    EXPECT_EQ(enumerate_harmonies(k).size(), category_size(k));
    total += category_size(k);
  }
  EXPECT_EQ(total, 2048u);
  EXPECT_EQ(enumerate_harmonies().size(), 2048u);
  EXPECT_EQ(enumerate_harmonies(7).size(), 462u);
  EXPECT_EQ(enumerate_harmonies(1), std::vector<Harmony>{Harmony({0})});
  EXPECT_THROW(enumerate_harmonies(0), UsageError);
  EXPECT_THROW(enumerate_harmonies(13), UsageError);
}

TEST(EnumerationTest, LexicographicAndDistinct) {
  const std::vector<Harmony> all = enumerate_harmonies();
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (const Harmony& h : all) {
    EXPECT_EQ(h.semitones().front(), 0);
    EXPECT_LE(h.semitones().back(), 11);
  }
}

TEST(RankTableTest, IonianLeadsUnderRationalTuning) {
  const RankTable t = rank_table(builtin_tuning("rational"), Measure::kLogPeriodicity, 7, 1);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.evaluated, 462u);
  EXPECT_EQ(t.rows[0].harmony, Harmony({0, 2, 4, 5, 7, 9, 11}));
  EXPECT_NEAR(t.rows[0].value, 6.453, 0.0005);
  EXPECT_EQ(t.rows[0].rank, 1);
}

TEST(RankTableTest, TopFiveToneHarmonyUnderJustTuning) {
  const RankTable t = rank_table(builtin_tuning("just"), Measure::kLogPeriodicity, 5, 1);
  EXPECT_EQ(t.rows[0].harmony, Harmony({0, 2, 4, 7, 11}));
  EXPECT_NEAR(t.rows[0].value, 3.751, 0.0005);
}

TEST(RankTableTest, SortedWithCompetitionRanks) {
  const RankTable t = rank_table(builtin_tuning("just"), Measure::kPeriodicity, 3);
  ASSERT_EQ(t.rows.size(), 55u);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    EXPECT_LE(t.rows[i - 1].value, t.rows[i].value + 1e-9);
    if (t.rows[i].rank == t.rows[i - 1].rank) {
      EXPECT_LT(t.rows[i - 1].harmony, t.rows[i].harmony);
    } else {
      EXPECT_EQ(t.rows[i].rank, static_cast<int>(i + 1));
    }
  }
}

TEST(RankTableTest, SimilarityRanksDescending) {
  const RankTable t = rank_table(builtin_tuning("just"), Measure::kSimilarity, 2);
  EXPECT_EQ(t.rows.front().harmony, Harmony({0, 7}));
  // The single tone has no intervals and is skipped in the full table.
  const RankTable all = rank_table(builtin_tuning("just"), Measure::kSimilarity, std::nullopt);
  EXPECT_EQ(all.evaluated, 2047u);
}

TEST(RankTableTest, DeterministicOutput) {
  auto render = [] {
    std::ostringstream out;
    write_rank_csv(out, rank_table(builtin_tuning("rational"), Measure::kLogPeriodicity, std::nullopt));
    return out.str();
  };
  const std::string first = render();
  EXPECT_EQ(first, render());
  EXPECT_EQ(first.substr(0, first.find('\n')), "rank;semitones;cardinality;value");
}

TEST(RankTableTest, FindRow) {
  const RankTable t = rank_table(builtin_tuning("rational"), Measure::kLogPeriodicity, 8);
  const RankRow* blues = find_row(t, Harmony({0, 2, 3, 4, 5, 7, 9, 10}));
  ASSERT_NE(blues, nullptr);
  EXPECT_NEAR(blues->value, 7.600, 0.0005);
  EXPECT_EQ(find_row(t, Harmony({0, 4, 7})), nullptr);
}

}  // namespace
}  // namespace harmony
