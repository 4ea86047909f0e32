#include "harmony/periodicity.hpp"

#include <algorithm>
#include <cmath>

#include "harmony/errors.hpp"

namespace harmony {

Harmony::Harmony(std::vector<int> semitones, std::string label)
    : semitones_(std::move(semitones)), label_(std::move(label)) {
  if (semitones_.empty()) throw UsageError("harmony needs at least one tone");
  if (semitones_.front() != 0) throw UsageError("harmony must start at semitone 0");
  for (std::size_t i = 1; i < semitones_.size(); ++i) {
    if (semitones_[i] <= semitones_[i - 1]) {
      throw UsageError("harmony semitones must be strictly increasing: " + to_string());
    }
  }
}

Harmony Harmony::from_pitches(std::vector<int> pitches, std::string label) {
  if (pitches.empty()) throw UsageError("harmony needs at least one tone");
  std::sort(pitches.begin(), pitches.end());
  if (auto dup = std::adjacent_find(pitches.begin(), pitches.end()); dup != pitches.end()) {
    throw UsageError("duplicate pitch " + std::to_string(*dup) + " in harmony");
  }
  const int lowest = pitches.front();
  for (int& p : pitches) p -= lowest;
  return Harmony(std::move(pitches), std::move(label));
}

Harmony Harmony::reduced_to_octave() const {
  std::vector<int> classes;
  classes.reserve(semitones_.size());
  for (int s : semitones_) classes.push_back(s % kSemitonesPerOctave);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return Harmony(std::move(classes), label_);
}

std::string Harmony::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < semitones_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(semitones_[i]);
  }
  return out;
}

std::vector<Fraction> frequency_ratios(std::span<const int> offsets, const TuningTable& tuning) {
  std::vector<Fraction> out;
  out.reserve(offsets.size());
  for (int n : offsets) out.push_back(ratio_for_semitone(tuning, n));
  return out;
}

namespace {

std::int64_t denominator_lcm(std::span<const Fraction> ratios) {
  std::vector<std::int64_t> dens;
  dens.reserve(ratios.size());
  for (const Fraction& r : ratios) dens.push_back(r.denominator());
  return lcm_many(dens);
}

}  // namespace

std::int64_t raw_periodicity(const Harmony& harmony, const TuningTable& tuning) {
  return denominator_lcm(frequency_ratios(harmony.semitones(), tuning));
}

std::vector<int> inversion_offsets(const Harmony& harmony, std::size_t i) {
  if (i >= harmony.size()) {
    throw UsageError("inversion index " + std::to_string(i) + " out of range for " +
                     std::to_string(harmony.size()) + " tones");
  }
  const int reference = harmony.semitones()[i];
  std::vector<int> out(harmony.semitones());
  for (int& s : out) s -= reference;
  return out;
}

AnalysisResult analyze(const Harmony& harmony, const TuningTable& tuning,
                       bool average_inversions) {
  AnalysisResult result{harmony, tuning.name(), 1, {}, 0.0, 0.0, {}};
  const std::size_t views = average_inversions ? harmony.size() : 1;
  result.inversion_h.reserve(views);

  Fraction sum = Fraction::integer(1);
  double log_sum = 0.0;
  for (std::size_t j = 0; j < views; ++j) {
    const std::vector<int> offsets = inversion_offsets(harmony, j);
    const std::vector<Fraction> ratios = frequency_ratios(offsets, tuning);
    const std::int64_t h = denominator_lcm(ratios);
    // Offsets are ascending, so ratios.front() is the lowest ratio.
    const Fraction scaled = Fraction::integer(h) * ratios.front();
    result.inversion_h.push_back(scaled);
    sum = (j == 0) ? scaled : sum + scaled;
    log_sum += std::log2(scaled.to_double());
  }
  result.raw_h = result.inversion_h.front().numerator();
  result.mean_h = (sum / Fraction::integer(static_cast<std::int64_t>(views))).to_double();
  result.mean_log_h = log_sum / static_cast<double>(views);
  return result;
}

double fundamental_frequency(const Harmony& harmony, const TuningTable& tuning, double f1) {
  if (!(f1 > 0.0)) throw UsageError("reference frequency must be positive");
  return f1 / static_cast<double>(raw_periodicity(harmony, tuning));
}

}  // namespace harmony
