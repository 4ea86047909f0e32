#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "harmony/periodicity.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

// lcm(a_1..a_k) * lcm(b_1..b_k) over the ratios relative to the lowest tone.
std::int64_t ratio_lcm_product(const Harmony& harmony, const TuningTable& tuning);

// Number of prime factors of n counted with multiplicity; omega(1) = 0.
int omega(std::int64_t n);

// Euler's degree of softness 1 + sum m_i (p_i - 1) of ratio_lcm_product.
std::int64_t gradus_suavitatis(const Harmony& harmony, const TuningTable& tuning);

// omega(ratio_lcm_product).
int omega_measure(const Harmony& harmony, const TuningTable& tuning);

// Interval ratios for every unordered pair of tones (upper over lower).
// Duplicate tones contribute the interval 1/1.
std::vector<Fraction> pairwise_intervals(std::span<const int> tones, const TuningTable& tuning);

// Geometric mean of all numerators and denominators of the intervals.
// Throws UndefinedMeasureError for an empty list.
double brefeld_value(std::span<const Fraction> intervals);
double brefeld_value(const Harmony& harmony, const TuningTable& tuning);

// Mean of (a+b-1)/(a*b) over the intervals, in percent.
double percentage_similarity(std::span<const Fraction> intervals);
double percentage_similarity(const Harmony& harmony, const TuningTable& tuning);

// (x/a * exp(1 - x/a))^b: peaks at 1 for x = a. Requires a > 0, b > 0, x >= 0.
double roughness_curve(double x, double a, double b = 2.0);

struct MeasureVector {
  std::int64_t gradus = 1;
  int omega = 0;
  // Undefined for a single tone.
  std::optional<double> brefeld;
  std::optional<double> similarity;
};

MeasureVector compute_measures(const Harmony& harmony, const TuningTable& tuning);

// Measures that can be evaluated for any harmony, by name.
enum class Measure {
  kRawPeriodicity,
  kPeriodicity,
  kLogPeriodicity,
  kGradus,
  kOmega,
  kBrefeld,
  kSimilarity,
};

// "raw_periodicity", "periodicity", "log_periodicity", "gradus", "omega",
// "brefeld", "similarity".
const std::vector<Measure>& all_measures();
std::string_view measure_name(Measure m);
// Throws UsageError for unknown names.
Measure parse_measure(std::string_view name);
std::optional<Measure> find_measure(std::string_view name);

// Similarity grows with consonance; every other measure shrinks.
bool higher_is_consonant(Measure m);

// Evaluates a measure on a tone list that may contain duplicates: duplicates
// collapse for periodicity, gradus and omega, and count as 1/1 intervals for
// the pairwise measures.
double evaluate_measure(Measure m, std::span<const int> tones, const TuningTable& tuning,
                        bool average_inversions = true);

}  // namespace harmony
