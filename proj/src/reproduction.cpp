#include "harmony/reproduction.hpp"

#include <cmath>

#include <fmt/format.h>

#include "harmony/correlation.hpp"
#include "harmony/datasets.hpp"
#include "harmony/errors.hpp"
#include "harmony/measures.hpp"
#include "harmony/periodicity.hpp"
#include "harmony/statistics.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

namespace {

constexpr double kCorrelationTol = 0.005;
constexpr double kSignificanceTol = 0.0005;
constexpr double kMeanTol = 0.05;
constexpr double kLogTol = 0.001;
constexpr double kPercentTol = 0.005;

using Mode = CorrelationMode;

struct Builder {
  Reproduction out;

  void add(std::string name, double expected, double actual, double tol, bool info = false,
           std::string tuning = {}) {
    out.checks.push_back({std::move(name), expected, actual, tol, std::move(tuning), info});
  }

  void correlation(const EmpiricalDataset& d, std::string_view measure, const TuningTable& t,
                   Mode mode, double r, std::optional<double> p = std::nullopt, bool info = false) {
    const CorrelationReport rep = correlate_measure(d, measure, t, mode);
    const std::string label = fmt::format("r {} {}{} ({})", d.id(), measure,
                                          rep.tuning.empty() ? "" : " " + rep.tuning, mode_name(mode));
    add(label, r, rep.r, kCorrelationTol, info, rep.tuning);
    if (p) add("p" + label.substr(1), *p, rep.p, kSignificanceTol, info, rep.tuning);
  }

  // Recomputes a measure per item and compares with a printed column.
  void column(const EmpiricalDataset& d, Measure m, const TuningTable& t, std::string_view printed,
              double tol) {
    const StaticColumn* col = d.find_column(printed);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const DatasetItem& item = d.items()[i];
      add(fmt::format("{} {} [{}]", measure_name(m), item.label, t.name()), *col->values[i],
          evaluate_measure(m, item.semitones, t), tol, false, t.name());
    }
  }

  void significance_only(std::string_view what, double r, int n, double p) {
    add(fmt::format("p {} (r={}, n={})", what, r, n), p, significance(r, n), kSignificanceTol);
  }
};

Reproduction table1() {
  Builder b{{"table1", {}}};
  const std::vector<std::pair<std::string, std::vector<double>>> printed = {
      {"pythagorean", {0, -.56, .23, -.34, .45, -.11, .68, .11, -.45, .34, -.23, .57, 0}},
      {"kirnberger3", {0, -1.68, .23, .91, -.79, -.11, -.56, .11, -1.57, -.90, -.23, -.68, 0}},
      {"rational", {0, .68, .23, .91, -.79, -.11, .17, .11, .79, -.90, -.23, -.68, 0}},
      {"just", {0, .68, .23, .91, -.79, -.11, -1.01, .11, .79, -.90, 1.02, -.68, 0}},
  };
  for (const auto& [name, devs] : printed) {
    const TuningTable t = builtin_tuning(name);
    for (int k = 0; k <= kSemitonesPerOctave; ++k) {
      b.add(fmt::format("deviation {} {}", name, interval_name(k)), devs[static_cast<std::size_t>(k)],
            deviation_percent(t, k), kPercentTol, false, name);
    }
  }
  const char* const kRationalColumn[] = {"1",   "16/15", "9/8", "6/5",  "5/4",  "4/3", "17/12",
                                         "3/2", "8/5",   "5/3", "16/9", "15/8", "2"};
  const TuningTable generated = rational_tuning(0.01);
  const TuningTable generated_wide = rational_tuning(0.011);
  const TuningTable just = builtin_tuning("just");
  for (int k = 0; k <= kSemitonesPerOctave; ++k) {
    const Fraction expected = Fraction::parse(kRationalColumn[k]);
    b.add(fmt::format("rational d=1% {} = {}", interval_name(k), expected.to_string()),
          expected.to_double(), generated.ratio(k).to_double(), 0.0, false, "rational");
    b.add(fmt::format("rational d=1.1% {} = just {}", interval_name(k), just.ratio(k).to_string()),
          just.ratio(k).to_double(), generated_wide.ratio(k).to_double(), 0.0, false, "just");
  }
  return b.out;
}

Reproduction table2() {
  Builder b{{"table2", {}}};
  const EmpiricalDataset d = load_dataset("dyads");
  const TuningTable just = builtin_tuning("just");
  b.column(d, Measure::kPeriodicity, just, "periodicity_printed", 1e-12);
  b.column(d, Measure::kSimilarity, just, "similarity_printed", kPercentTol);
  b.correlation(d, "roughness", just, Mode::kRanks, .967);
  b.correlation(d, "sonance", just, Mode::kRanks, .982);
  b.correlation(d, "similarity", just, Mode::kRanks, .977);
  b.correlation(d, "periodicity", just, Mode::kRanks, .982);
  b.correlation(d, "log_periodicity", just, Mode::kRanks, .982);
  return b.out;
}

Reproduction table3() {
  Builder b{{"table3", {}}};
  const EmpiricalDataset d = load_dataset("triads");
  const TuningTable just = builtin_tuning("just");
  b.column(d, Measure::kPeriodicity, just, "periodicity_printed", kMeanTol);
  b.column(d, Measure::kSimilarity, just, "similarity_printed", kPercentTol);
  b.correlation(d, "roughness", just, Mode::kRanks, .352);
  b.correlation(d, "instability", just, Mode::kRanks, .698);
  b.correlation(d, "similarity", just, Mode::kRanks, .802);
  b.correlation(d, "periodicity", just, Mode::kRanks, .846);
  b.correlation(d, "dual_process", just, Mode::kRanks, .791);
  return b.out;
}

Reproduction table4() {
  Builder b{{"table4", {}}};
  const EmpiricalDataset d = load_dataset("complete_triads");
  const TuningTable just = builtin_tuning("just");
  b.column(d, Measure::kPeriodicity, just, "periodicity_printed", kMeanTol);
  b.column(d, Measure::kLogPeriodicity, just, "log_periodicity_printed", kLogTol);
  b.column(d, Measure::kSimilarity, just, "similarity_printed", kPercentTol);
  b.correlation(d, "roughness", just, Mode::kRanks, .761, .0001);
  b.correlation(d, "roughness", just, Mode::kValues, .746, .0001);
  b.correlation(d, "similarity", just, Mode::kRanks, .760, .0001);
  b.correlation(d, "similarity", just, Mode::kValues, .765, .0001);
  b.correlation(d, "periodicity", just, Mode::kRanks, .713, .0003);
  b.correlation(d, "periodicity", just, Mode::kValues, .548, .0075);
  b.correlation(d, "log_periodicity", just, Mode::kRanks, .867, .0000);
  b.correlation(d, "log_periodicity", just, Mode::kValues, .810, .0000);
  b.correlation(d, "dual_process", just, Mode::kRanks, .916, .0000);
  return b.out;
}

Reproduction table6() {
  Builder b{{"table6", {}}};
  const EmpiricalDataset d = load_dataset("church_modes");
  const TuningTable just = builtin_tuning("just");
  const TuningTable rational = builtin_tuning("rational");
  b.column(d, Measure::kLogPeriodicity, just, "log_periodicity_just_printed", kLogTol);
  b.column(d, Measure::kLogPeriodicity, rational, "log_periodicity_rational_printed", kLogTol);
  b.correlation(d, "sonance", just, Mode::kRanks, .667, .0510);
  b.correlation(d, "similarity_printed", just, Mode::kRanks, .036, .4697);
  b.correlation(d, "log_periodicity", just, Mode::kRanks, .786, .0181);
  b.correlation(d, "log_periodicity", rational, Mode::kRanks, .964, .0002);
  return b.out;
}

Reproduction cor2() {
  Builder b{{"cor2", {}}};
  const EmpiricalDataset d = load_dataset("dyads");
  const TuningTable just = builtin_tuning("just");
  b.correlation(d, "sonance", just, Mode::kRanks, .982, .0000);
  b.correlation(d, "periodicity", just, Mode::kRanks, .982, .0000);
  b.correlation(d, "log_periodicity", just, Mode::kRanks, .982, .0000);
  b.correlation(d, "similarity", just, Mode::kRanks, .977, .0000);
  b.correlation(d, "roughness", just, Mode::kRanks, .967, .0000);
  b.correlation(d, "periodicity", builtin_tuning("rational"), Mode::kRanks, .936, .0000);
  b.correlation(d, "log_periodicity", builtin_tuning("rational"), Mode::kRanks, .936, .0000);
  b.correlation(d, "periodicity", builtin_tuning("pythagorean"), Mode::kRanks, .817, .0003);
  b.correlation(d, "periodicity", builtin_tuning("kirnberger3"), Mode::kRanks, .796, .0006);
  b.correlation(d, "gradus", just, Mode::kRanks, .941, .0000, true);
  b.correlation(d, "brefeld", just, Mode::kRanks, .940, .0000, true);
  b.correlation(d, "omega", just, Mode::kRanks, .886, .0000, true);
  b.significance_only("generalized coincidence", .841, 13, .0002);
  b.significance_only("complex tonalness", .738, 13, .0020);
  return b.out;
}

Reproduction cor3() {
  Builder b{{"cor3", {}}};
  const EmpiricalDataset d = load_dataset("triads");
  const TuningTable just = builtin_tuning("just");
  const TuningTable rational = builtin_tuning("rational");
  b.correlation(d, "periodicity", just, Mode::kRanks, .846, .0001);
  b.correlation(d, "log_periodicity", just, Mode::kRanks, .831, .0002);
  b.correlation(d, "log_periodicity", rational, Mode::kRanks, .813, .0004);
  b.correlation(d, "periodicity", rational, Mode::kRanks, .808, .0004);
  b.correlation(d, "similarity", just, Mode::kRanks, .802, .0005);
  b.correlation(d, "dual_process", just, Mode::kRanks, .791, .0006);
  b.correlation(d, "instability", just, Mode::kRanks, .698, .0040);
  b.correlation(d, "roughness", just, Mode::kRanks, .352, .1193);
  b.correlation(d, "brefeld", just, Mode::kRanks, .755, .0014, true);
  b.correlation(d, "gradus", just, Mode::kRanks, .690, .0045, true);
  b.significance_only("sensory dissonance", .607, 13, .0139);
  b.significance_only("tension", .599, 13, .0153);
  b.significance_only("critical bandwidth", .570, 13, .0210);
  b.significance_only("temporal dissonance", .503, 13, .0399);
  b.significance_only("sonance factor", .434, 13, .0692);
  b.significance_only("dissonance curve", .723, 13, .0026);
  b.significance_only("pure tonalness", .675, 10, .0162);
  b.significance_only("consonance degree", .826, 10, .0016);
  return b.out;
}

}  // namespace

bool Check::within_tolerance() const {
  return std::fabs(actual - expected) <= tolerance + 1e-12;
}

bool Reproduction::passed() const {
  for (const Check& c : checks) {
    if (!c.informational && !c.within_tolerance()) return false;
  }
  return true;
}

const std::vector<std::string>& reproduction_targets() {
  static const std::vector<std::string> kTargets = {"table1", "table2", "table3", "table4",
                                                    "table6", "cor2",   "cor3"};
  return kTargets;
}

Reproduction reproduce(std::string_view target) {
  if (target == "table1") return table1();
  if (target == "table2") return table2();
  if (target == "table3") return table3();
  if (target == "table4") return table4();
  if (target == "table6") return table6();
  if (target == "cor2") return cor2();
  if (target == "cor3") return cor3();
  std::string valid;
  for (const auto& t : reproduction_targets()) valid += (valid.empty() ? "" : ", ") + t;
  throw UsageError("unknown reproduction target '" + std::string(target) + "' (valid: " + valid + ")");
}

}  // namespace harmony
