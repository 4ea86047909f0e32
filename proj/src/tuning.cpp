#include "harmony/tuning.hpp"

#include <cmath>
#include <fmt/format.h>

#include "harmony/errors.hpp"

namespace harmony {

namespace {

constexpr std::array<std::string_view, kSemitonesPerOctave + 1> kIntervalNames = {
    "unison",        "minor second",  "major second", "minor third", "major third",
    "perfect fourth", "tritone",      "perfect fifth", "minor sixth", "major sixth",
    "minor seventh", "major seventh", "octave"};

TuningTable::Ratios parse_column(const std::array<const char*, kSemitonesPerOctave + 1>& text) {
  TuningTable::Ratios out;
  for (std::size_t k = 0; k < text.size(); ++k) out[k] = Fraction::parse(text[k]);
  return out;
}

void check_semitone(int k) {
  if (k < 0 || k > kSemitonesPerOctave) {
    throw UsageError("semitone index must lie in 0..12, got " + std::to_string(k));
  }
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

TuningTable TuningTable::equal_temperament() {
  TuningTable t;
  t.name_ = "equal";
  return t;
}

TuningTable TuningTable::rational(std::string name, const Ratios& ratios,
                                  std::optional<double> deviation_bound) {
  if (ratios.front() != Fraction::integer(1) || ratios.back() != Fraction::integer(2)) {
    throw UsageError("tuning '" + name + "' must map semitone 0 to 1/1 and 12 to 2/1");
  }
  for (std::size_t k = 1; k < ratios.size(); ++k) {
    if (!(ratios[k - 1] < ratios[k])) {
      throw UsageError("tuning '" + name + "' ratios must be strictly increasing");
    }
  }
  TuningTable t;
  t.name_ = std::move(name);
  t.ratios_ = ratios;
  t.deviation_bound_ = deviation_bound;
  return t;
}

const TuningTable::Ratios& TuningTable::ratios() const {
  if (!ratios_) {
    throw TuningError("tuning '" + name_ +
                      "' has irrational frequency ratios; periodicity needs fractions "
                      "(use just, rational, pythagorean or kirnberger3)");
  }
  return *ratios_;
}

const Fraction& TuningTable::ratio(int semitone) const {
  check_semitone(semitone);
  return ratios()[static_cast<std::size_t>(semitone)];
}

double TuningTable::value(int semitone) const {
  check_semitone(semitone);
  if (!ratios_) return std::exp2(semitone / 12.0);
  return (*ratios_)[static_cast<std::size_t>(semitone)].to_double();
}

const std::vector<std::string>& tuning_names() {
  static const std::vector<std::string> kNames = {"equal", "pythagorean", "kirnberger3",
                                                  "rational", "just"};
  return kNames;
}

TuningTable builtin_tuning(std::string_view name) {
  if (name == "equal") return TuningTable::equal_temperament();
  if (name == "pythagorean") {
    return TuningTable::rational(
        "pythagorean", parse_column({"1", "256/243", "9/8", "32/27", "81/64", "4/3", "729/512",
                                     "3/2", "128/81", "27/16", "16/9", "243/128", "2"}));
  }
  if (name == "kirnberger3") {
    return TuningTable::rational(
        "kirnberger3", parse_column({"1", "25/24", "9/8", "6/5", "5/4", "4/3", "45/32", "3/2",
                                     "25/16", "5/3", "16/9", "15/8", "2"}));
  }
  if (name == "rational") return rational_tuning(0.01);
  if (name == "just") {
    return TuningTable::rational(
        "just", parse_column({"1", "16/15", "9/8", "6/5", "5/4", "4/3", "7/5", "3/2", "8/5",
                              "5/3", "9/5", "15/8", "2"}));
  }
  std::string valid;
  for (const auto& n : tuning_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw UsageError("unknown tuning '" + std::string(name) + "' (valid: " + valid + ")");
}

TuningTable rational_tuning(double d) {
  if (!(d > 0.0 && d < 0.06)) {
    throw UsageError("rational tuning deviation must lie in (0, 0.06), got " + std::to_string(d));
  }
  TuningTable::Ratios ratios;
  ratios[0] = Fraction::integer(1);
  ratios[kSemitonesPerOctave] = Fraction::integer(2);
  for (int k = 1; k < kSemitonesPerOctave; ++k) {
    ratios[static_cast<std::size_t>(k)] = approximate(std::exp2(k / 12.0), d).result;
  }
  // Wide bounds let neighbouring semitones pick the same fraction.
  for (std::size_t k = 1; k <= kSemitonesPerOctave; ++k) {
    if (!(ratios[k - 1] < ratios[k])) {
      throw UsageError(fmt::format("deviation {} is too wide: semitones {} and {} both map to {}", d,
                                   k - 1, k, ratios[k].to_string()));
    }
  }
  return TuningTable::rational("rational", ratios, d);
}

Fraction ratio_for_semitone(const TuningTable& tuning, int n) {
  const int octaves = floor_div(n, kSemitonesPerOctave);
  const int k = n - octaves * kSemitonesPerOctave;
  const Fraction& base = tuning.ratio(k);
  if (octaves >= 0) {
    return base * Fraction::integer(checked_pow(2, static_cast<unsigned>(octaves)));
  }
  return base / Fraction::integer(checked_pow(2, static_cast<unsigned>(-octaves)));
}

double deviation_percent(const TuningTable& tuning, int k) {
  return (tuning.value(k) / std::exp2(k / 12.0) - 1.0) * 100.0;
}

std::string_view interval_name(int k) {
  check_semitone(k);
  return kIntervalNames[static_cast<std::size_t>(k)];
}

void write_tuning_csv(std::ostream& out, const TuningTable& tuning) {
  out << "semitone,interval_name,numerator,denominator,deviation_percent\n";
  for (int k = 0; k <= kSemitonesPerOctave; ++k) {
    out << k << ',' << interval_name(k) << ',';
    if (tuning.is_rational()) {
      const Fraction& r = tuning.ratio(k);
      out << r.numerator() << ',' << r.denominator();
    } else {
      out << ',';
    }
    out << ',' << fmt::format("{:.2f}", deviation_percent(tuning, k)) << '\n';
  }
}

}  // namespace harmony
