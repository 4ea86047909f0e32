#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "harmony/rational.hpp"

namespace harmony {

inline constexpr int kSemitonesPerOctave = 12;

// Frequency ratios for semitones 0..12 of one tuning. Equal temperament has no
// fractions; every other tuning is rational-valued.
class TuningTable {
 public:
  using Ratios = std::array<Fraction, kSemitonesPerOctave + 1>;

  static TuningTable equal_temperament();
  // Validates unison 1/1, octave 2/1 and strictly increasing ratios.
  static TuningTable rational(std::string name, const Ratios& ratios,
                              std::optional<double> deviation_bound = std::nullopt);

  const std::string& name() const { return name_; }
  bool is_rational() const { return ratios_.has_value(); }
  // Relative bound d (0.01 = 1%) the table was generated with, if any.
  std::optional<double> deviation_bound() const { return deviation_bound_; }

  // Throws TuningError for equal temperament.
  const Ratios& ratios() const;
  const Fraction& ratio(int semitone) const;
  // Real-valued ratio of semitone 0..12; works for every tuning.
  double value(int semitone) const;

 private:
  TuningTable() = default;

  std::string name_;
  std::optional<Ratios> ratios_;
  std::optional<double> deviation_bound_;
};

// "equal", "pythagorean", "kirnberger3", "rational", "just".
const std::vector<std::string>& tuning_names();

// Throws UsageError listing the valid names for an unknown one.
TuningTable builtin_tuning(std::string_view name);

// Smallest-denominator fraction within relative bound d of 2^(k/12) for each
// semitone. Requires 0 < d < 0.06.
TuningTable rational_tuning(double d);

// ratios[n mod 12] * 2^(n div 12) with floor semantics, so negative offsets
// take the ratio of the complementary semitone divided by a power of two.
Fraction ratio_for_semitone(const TuningTable& tuning, int n);

// Signed relative deviation of ratios[k] from 2^(k/12), in percent.
double deviation_percent(const TuningTable& tuning, int k);

// "unison", "minor second", ..., "octave".
std::string_view interval_name(int k);

// Header: semitone,interval_name,numerator,denominator,deviation_percent
void write_tuning_csv(std::ostream& out, const TuningTable& tuning);

}  // namespace harmony
