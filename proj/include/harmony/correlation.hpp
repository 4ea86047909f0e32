#pragma once

#include <string>
#include <string_view>

#include "harmony/datasets.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

enum class CorrelationMode { kRanks, kValues };

std::string_view mode_name(CorrelationMode mode);
CorrelationMode parse_mode(std::string_view name);

struct CorrelationReport {
  std::string dataset;
  std::string measure;
  // Tuning name; empty for static columns that do not depend on a tuning.
  std::string tuning;
  CorrelationMode mode = CorrelationMode::kRanks;
  double r = 0.0;
  int n = 0;
  // One-sided p for H1: r > 0.
  double p = 1.0;
};

// Correlates a measure with the dataset's empirical ratings. The measure is
// either a computable one (see parse_measure) or a static column name. Both
// sides are oriented so larger means less consonant; ranks mode ranks both
// with tie averaging, values mode uses the ordinal rating column (falling
// back to the empirical ranks). Rows missing a value are skipped.
CorrelationReport correlate_measure(const EmpiricalDataset& dataset, std::string_view measure,
                                    const TuningTable& tuning, CorrelationMode mode,
                                    bool average_inversions = true);

}  // namespace harmony
