#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmony/measures.hpp"
#include "harmony/periodicity.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

// Number of one-octave harmonies with k tones: C(11, k-1).
std::size_t category_size(int cardinality);

// Visits every subset of {0..11} that contains 0, in lexicographic order of
// the semitone lists, optionally restricted to one cardinality (1..12).
void for_each_harmony(std::optional<int> cardinality,
                      const std::function<void(const Harmony&)>& visit);
std::vector<Harmony> enumerate_harmonies(std::optional<int> cardinality = std::nullopt);

struct RankRow {
  Harmony harmony;
  double value = 0.0;
  // Competition rank (1,2,2,4) within the evaluated rows.
  int rank = 0;
};

struct RankTable {
  std::string tuning;
  Measure measure = Measure::kLogPeriodicity;
  std::optional<int> cardinality;
  // Rows evaluated before truncation.
  std::size_t evaluated = 0;
  // Most consonant first; ties ordered by semitone list.
  std::vector<RankRow> rows;
};

// Evaluates the measure on every harmony of the category and sorts the
// result. Harmonies where the measure is undefined (a single tone for the
// pairwise measures) are left out. top = 0 keeps every row.
RankTable rank_table(const TuningTable& tuning, Measure measure, std::optional<int> cardinality,
                     std::size_t top = 0, bool average_inversions = true);

// Row for the harmony in a full table, or nullptr.
const RankRow* find_row(const RankTable& table, const Harmony& harmony);

}  // namespace harmony
