#include "harmony/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "harmony/errors.hpp"

namespace harmony {

std::int64_t ratio_lcm_product(const Harmony& harmony, const TuningTable& tuning) {
  std::vector<std::int64_t> nums;
  std::vector<std::int64_t> dens;
  for (const Fraction& r : frequency_ratios(harmony.semitones(), tuning)) {
    nums.push_back(r.numerator());
    dens.push_back(r.denominator());
  }
  return checked_mul(lcm_many(nums), lcm_many(dens));
}

int omega(std::int64_t n) {
  int count = 0;
  for (const PrimePower& pp : prime_factors(n)) count += pp.multiplicity;
  return count;
}

std::int64_t gradus_suavitatis(const Harmony& harmony, const TuningTable& tuning) {
  std::int64_t degree = 1;
  for (const PrimePower& pp : prime_factors(ratio_lcm_product(harmony, tuning))) {
    degree += pp.multiplicity * (pp.prime - 1);
  }
  return degree;
}

int omega_measure(const Harmony& harmony, const TuningTable& tuning) {
  return omega(ratio_lcm_product(harmony, tuning));
}

std::vector<Fraction> pairwise_intervals(std::span<const int> tones, const TuningTable& tuning) {
  std::vector<int> sorted(tones.begin(), tones.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Fraction> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      out.push_back(ratio_for_semitone(tuning, sorted[j] - sorted[i]));
    }
  }
  return out;
}

double brefeld_value(std::span<const Fraction> intervals) {
  if (intervals.empty()) throw UndefinedMeasureError("consonance value needs at least two tones");
  // Sum logs: the raw product overflows for large chords.
  double log_sum = 0.0;
  for (const Fraction& r : intervals) {
    log_sum += std::log(static_cast<double>(r.numerator())) +
               std::log(static_cast<double>(r.denominator()));
  }
  return std::exp(log_sum / (2.0 * static_cast<double>(intervals.size())));
}

double brefeld_value(const Harmony& harmony, const TuningTable& tuning) {
  return brefeld_value(pairwise_intervals(harmony.semitones(), tuning));
}

double percentage_similarity(std::span<const Fraction> intervals) {
  if (intervals.empty()) {
    throw UndefinedMeasureError("percentage similarity needs at least two tones");
  }
  double sum = 0.0;
  for (const Fraction& r : intervals) {
    const auto a = static_cast<double>(r.numerator());
    const auto b = static_cast<double>(r.denominator());
    sum += (a + b - 1.0) / (a * b);
  }
  return 100.0 * sum / static_cast<double>(intervals.size());
}

double percentage_similarity(const Harmony& harmony, const TuningTable& tuning) {
  return percentage_similarity(pairwise_intervals(harmony.semitones(), tuning));
}

double roughness_curve(double x, double a, double b) {
  if (!(a > 0.0)) throw UsageError("roughness curve: a must be positive");
  if (!(b > 0.0)) throw UsageError("roughness curve: b must be positive");
  if (!(x >= 0.0)) throw UsageError("roughness curve: x must be non-negative");
  const double u = x / a;
  return std::pow(u * std::exp(1.0 - u), b);
}

MeasureVector compute_measures(const Harmony& harmony, const TuningTable& tuning) {
  MeasureVector v;
  v.gradus = gradus_suavitatis(harmony, tuning);
  v.omega = omega_measure(harmony, tuning);
  if (harmony.size() >= 2) {
    const auto intervals = pairwise_intervals(harmony.semitones(), tuning);
    v.brefeld = brefeld_value(intervals);
    v.similarity = percentage_similarity(intervals);
  }
  return v;
}

namespace {

struct MeasureInfo {
  Measure id;
  std::string_view name;
};

constexpr std::array<MeasureInfo, 7> kMeasures = {{
    {Measure::kRawPeriodicity, "raw_periodicity"},
    {Measure::kPeriodicity, "periodicity"},
    {Measure::kLogPeriodicity, "log_periodicity"},
    {Measure::kGradus, "gradus"},
    {Measure::kOmega, "omega"},
    {Measure::kBrefeld, "brefeld"},
    {Measure::kSimilarity, "similarity"},
}};

}  // namespace

const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> kAll = [] {
    std::vector<Measure> out;
    for (const auto& m : kMeasures) out.push_back(m.id);
    return out;
  }();
  return kAll;
}

std::string_view measure_name(Measure m) {
  for (const auto& info : kMeasures) {
    if (info.id == m) return info.name;
  }
  return "unknown";
}

std::optional<Measure> find_measure(std::string_view name) {
  for (const auto& info : kMeasures) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

Measure parse_measure(std::string_view name) {
  if (auto m = find_measure(name)) return *m;
  std::string valid;
  for (const auto& info : kMeasures) {
    valid += (valid.empty() ? "" : ", ") + std::string(info.name);
  }
  throw UsageError("unknown measure '" + std::string(name) + "' (valid: " + valid + ")");
}

bool higher_is_consonant(Measure m) { return m == Measure::kSimilarity; }

double evaluate_measure(Measure m, std::span<const int> tones, const TuningTable& tuning,
                        bool average_inversions) {
  switch (m) {
    case Measure::kBrefeld:
      return brefeld_value(pairwise_intervals(tones, tuning));
    case Measure::kSimilarity:
      return percentage_similarity(pairwise_intervals(tones, tuning));
    default:
      break;
  }
  std::vector<int> distinct(tones.begin(), tones.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const Harmony harmony = Harmony::from_pitches(std::move(distinct));
  switch (m) {
    case Measure::kRawPeriodicity:
      return static_cast<double>(raw_periodicity(harmony, tuning));
    case Measure::kPeriodicity:
      return analyze(harmony, tuning, average_inversions).mean_h;
    case Measure::kLogPeriodicity:
      return analyze(harmony, tuning, average_inversions).mean_log_h;
    case Measure::kGradus:
      return static_cast<double>(gradus_suavitatis(harmony, tuning));
    case Measure::kOmega:
      return omega_measure(harmony, tuning);
    default:
      throw UsageError("unhandled measure");
  }
}

}  // namespace harmony
