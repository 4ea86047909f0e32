#include "harmony/correlation.hpp"

#include <optional>
#include <vector>

#include "harmony/errors.hpp"
#include "harmony/measures.hpp"
#include "harmony/statistics.hpp"

namespace harmony {

std::string_view mode_name(CorrelationMode mode) {
  return mode == CorrelationMode::kRanks ? "ranks" : "values";
}

CorrelationMode parse_mode(std::string_view name) {
  if (name == "ranks") return CorrelationMode::kRanks;
  if (name == "values") return CorrelationMode::kValues;
  throw UsageError("unknown correlation mode '" + std::string(name) + "' (valid: ranks, values)");
}

CorrelationReport correlate_measure(const EmpiricalDataset& dataset, std::string_view measure,
                                    const TuningTable& tuning, CorrelationMode mode,
                                    bool average_inversions) {
  CorrelationReport report;
  report.dataset = dataset.id();
  report.measure = std::string(measure);
  report.mode = mode;

  std::vector<std::optional<double>> theory;
  if (const auto computed = find_measure(measure)) {
    report.tuning = tuning.name();
    const double sign = higher_is_consonant(*computed) ? -1.0 : 1.0;
    for (const DatasetItem& item : dataset.items()) {
      theory.push_back(sign * evaluate_measure(*computed, item.semitones, tuning, average_inversions));
    }
  } else if (const StaticColumn* column = dataset.find_column(measure)) {
    for (const auto& v : column->values) {
      theory.push_back(v ? std::optional<double>(column->higher_is_consonant ? -*v : *v)
                         : std::nullopt);
    }
  } else {
    throw UsageError("measure '" + std::string(measure) + "' is neither computable nor a column of " +
                     dataset.id());
  }

  std::vector<std::optional<double>> empirical;
  const StaticColumn* rating = dataset.rating();
  if (mode == CorrelationMode::kValues && rating != nullptr) {
    for (const auto& v : rating->values) {
      empirical.push_back(v ? std::optional<double>(rating->higher_is_consonant ? -*v : *v)
                            : std::nullopt);
    }
  } else {
    for (const DatasetItem& item : dataset.items()) empirical.emplace_back(item.empirical);
  }

  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (empirical[i] && theory[i]) {
      x.push_back(*empirical[i]);
      y.push_back(*theory[i]);
    }
  }
  if (mode == CorrelationMode::kRanks) {
    x = rank_with_ties(x);
    y = rank_with_ties(y);
  }
  report.n = static_cast<int>(x.size());
  report.r = pearson(x, y);
  report.p = significance(report.r, report.n);
  return report;
}

}  // namespace harmony
