#include "harmony/enumeration.hpp"

#include <algorithm>
#include <cmath>

#include "harmony/errors.hpp"

namespace harmony {

namespace {

constexpr double kTieTolerance = 1e-9;

void check_cardinality(std::optional<int> cardinality) {
  if (cardinality && (*cardinality < 1 || *cardinality > kSemitonesPerOctave)) {
    throw UsageError("cardinality must lie in 1..12, got " + std::to_string(*cardinality));
  }
}

void visit_from(std::vector<int>& current, std::optional<int> cardinality,
                const std::function<void(const Harmony&)>& visit) {
  const auto size = static_cast<int>(current.size());
  if (!cardinality || *cardinality == size) visit(Harmony(current));
  if (cardinality && size >= *cardinality) return;
  for (int next = current.back() + 1; next < kSemitonesPerOctave; ++next) {
    current.push_back(next);
    visit_from(current, cardinality, visit);
    current.pop_back();
  }
}

}  // namespace

std::size_t category_size(int cardinality) {
  check_cardinality(cardinality);
  std::size_t out = 1;
  const int k = cardinality - 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(11 - k + i) / static_cast<std::size_t>(i);
  return out;
}

void for_each_harmony(std::optional<int> cardinality,
                      const std::function<void(const Harmony&)>& visit) {
  check_cardinality(cardinality);
  std::vector<int> current{0};
  visit_from(current, cardinality, visit);
}

std::vector<Harmony> enumerate_harmonies(std::optional<int> cardinality) {
  std::vector<Harmony> out;
  for_each_harmony(cardinality, [&out](const Harmony& h) { out.push_back(h); });
  return out;
}

RankTable rank_table(const TuningTable& tuning, Measure measure, std::optional<int> cardinality,
                     std::size_t top, bool average_inversions) {
  RankTable table;
  table.tuning = tuning.name();
  table.measure = measure;
  table.cardinality = cardinality;
  const double sign = higher_is_consonant(measure) ? -1.0 : 1.0;

  std::vector<std::pair<double, RankRow>> keyed;
  for_each_harmony(cardinality, [&](const Harmony& h) {
    double value = 0.0;
    try {
      value = evaluate_measure(measure, h.semitones(), tuning, average_inversions);
    } catch (const UndefinedMeasureError&) {
      return;
    }
    keyed.emplace_back(sign * value, RankRow{h, value, 0});
  });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.harmony < b.second.harmony;
  });

  // Values within the tie tolerance of a group's first value share its rank
  // and are ordered by semitone list.
  table.evaluated = keyed.size();
  table.rows.reserve(keyed.size());
  std::size_t group = 0;
  while (group < keyed.size()) {
    const double anchor = keyed[group].first;
    std::size_t end = group + 1;
    while (end < keyed.size() &&
           keyed[end].first - anchor <= kTieTolerance * std::max(1.0, std::fabs(anchor))) {
      ++end;
    }
    std::vector<RankRow> tied;
    for (std::size_t i = group; i < end; ++i) tied.push_back(std::move(keyed[i].second));
    std::sort(tied.begin(), tied.end(),
              [](const RankRow& a, const RankRow& b) { return a.harmony < b.harmony; });
    for (RankRow& row : tied) {
      row.rank = static_cast<int>(group + 1);
      table.rows.push_back(std::move(row));
    }
    group = end;
  }
  if (top > 0 && table.rows.size() > top) table.rows.erase(table.rows.begin() + static_cast<std::ptrdiff_t>(top), table.rows.end());
  return table;
}

const RankRow* find_row(const RankTable& table, const Harmony& harmony) {
  for (const RankRow& row : table.rows) {
    if (row.harmony == harmony) return &row;
  }
  return nullptr;
}

}  // namespace harmony
