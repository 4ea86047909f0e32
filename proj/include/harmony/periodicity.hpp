#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "harmony/rational.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

// A chord or scale as semitone offsets above its lowest tone. The first
// offset is always 0 and offsets are strictly increasing; they may exceed 11.
class Harmony {
 public:
  // Throws UsageError unless the offsets already satisfy the invariants.
  explicit Harmony(std::vector<int> semitones, std::string label = {});

  // Accepts any set of distinct pitches (absolute or relative, any order) and
  // shifts it so the lowest becomes 0. Duplicates are a UsageError.
  static Harmony from_pitches(std::vector<int> pitches, std::string label = {});

  const std::vector<int>& semitones() const { return semitones_; }
  std::size_t size() const { return semitones_.size(); }
  const std::string& label() const { return label_; }

  // Pitch classes of every tone, deduplicated. Label is kept.
  Harmony reduced_to_octave() const;

  // "0,4,7"
  std::string to_string() const;

  friend bool operator==(const Harmony& lhs, const Harmony& rhs) {
    return lhs.semitones_ == rhs.semitones_;
  }
  friend std::strong_ordering operator<=>(const Harmony& lhs, const Harmony& rhs) {
    return lhs.semitones_ <=> rhs.semitones_;
  }

 private:
  std::vector<int> semitones_;
  std::string label_;
};

struct AnalysisResult {
  Harmony harmony;
  std::string tuning;
  std::int64_t raw_h = 1;
  // h'_j = lcm of the denominators of inversion j, scaled by its lowest ratio.
  std::vector<Fraction> inversion_h;
  double mean_h = 1.0;
  double mean_log_h = 0.0;
  // Optional rival-measure values keyed by measure name.
  std::map<std::string, double> extras;
};

// Ratios of each offset relative to offset 0 under the tuning.
std::vector<Fraction> frequency_ratios(std::span<const int> offsets, const TuningTable& tuning);

// lcm of the denominators of the harmony's frequency ratios.
std::int64_t raw_periodicity(const Harmony& harmony, const TuningTable& tuning);

// Offsets re-referenced to tone i (tone i becomes 0, lower tones negative).
std::vector<int> inversion_offsets(const Harmony& harmony, std::size_t i);

// Periodicity for every reference tone, averaged arithmetically (mean_h) and
// logarithmically (mean_log_h). With average_inversions off only the lowest
// tone is used.
AnalysisResult analyze(const Harmony& harmony, const TuningTable& tuning,
                       bool average_inversions = true);

// f1 / h: frequency of the periodic pattern built on a lowest tone f1 (Hz).
double fundamental_frequency(const Harmony& harmony, const TuningTable& tuning, double f1);

}  // namespace harmony
