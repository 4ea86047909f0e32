#pragma once

#include <optional>
#include <vector>

#include "harmony/periodicity.hpp"
#include "harmony/tuning.hpp"

namespace harmony {

// Superposition of pure sine tones, frequencies in Hz (positive, ascending).
class ToneStack {
 public:
  explicit ToneStack(std::vector<double> frequencies);

  // Tones at f1 * ratio for every offset of the harmony.
  static ToneStack from_harmony(const Harmony& harmony, const TuningTable& tuning, double f1);

  const std::vector<double>& frequencies() const { return frequencies_; }
  std::size_t size() const { return frequencies_.size(); }
  double lowest() const { return frequencies_.front(); }
  double highest() const { return frequencies_.back(); }

 private:
  std::vector<double> frequencies_;
};

// Closed-form autocorrelation of the sine sum at lag tau (seconds):
// 1/2 * sum_i cos(2 pi f_i tau). Phases drop out.
double autocorrelation(const ToneStack& stack, double tau);

struct PeriodSearch {
  // Search up to this many periods of the lowest tone (>= 1).
  double horizon_periods = 16.0;
  // Grid spacing in seconds; defaults to lowest period / 1000. Must not
  // exceed highest period / 20.
  std::optional<double> grid_step;
};

// Smallest lag > 0 where the autocorrelation returns to its value at 0
// within 1e-9 * tone count, refined by golden-section search around grid
// maxima. nullopt when no such lag exists within the horizon.
std::optional<double> detect_period(const ToneStack& stack, const PeriodSearch& search = {});

}  // namespace harmony
