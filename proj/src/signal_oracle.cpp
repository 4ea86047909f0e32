#include "harmony/signal_oracle.hpp"

#include <cmath>
#include <numbers>

#include "harmony/errors.hpp"

namespace harmony {

ToneStack::ToneStack(std::vector<double> frequencies) : frequencies_(std::move(frequencies)) {
  if (frequencies_.empty()) throw UsageError("tone stack needs at least one frequency");
  for (std::size_t i = 0; i < frequencies_.size(); ++i) {
    if (!(frequencies_[i] > 0.0) || !std::isfinite(frequencies_[i])) {
      throw UsageError("tone frequencies must be positive");
    }
    if (i > 0 && !(frequencies_[i] > frequencies_[i - 1])) {
      throw UsageError("tone frequencies must be strictly ascending");
    }
  }
}

ToneStack ToneStack::from_harmony(const Harmony& harmony, const TuningTable& tuning, double f1) {
  if (!(f1 > 0.0)) throw UsageError("reference frequency must be positive");
  std::vector<double> freqs;
  for (const Fraction& r : frequency_ratios(harmony.semitones(), tuning)) {
    freqs.push_back(f1 * r.to_double());
  }
  return ToneStack(std::move(freqs));
}

double autocorrelation(const ToneStack& stack, double tau) {
  double sum = 0.0;
  for (double f : stack.frequencies()) sum += std::cos(2.0 * std::numbers::pi * f * tau);
  return 0.5 * sum;
}

namespace {

// Maximizes rho on [lo, hi], assumed unimodal there.
double golden_section_max(const ToneStack& stack, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = autocorrelation(stack, c);
  double fd = autocorrelation(stack, d);
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = autocorrelation(stack, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = autocorrelation(stack, d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<double> detect_period(const ToneStack& stack, const PeriodSearch& search) {
  if (!(search.horizon_periods >= 1.0)) throw UsageError("search horizon must be >= 1 period");
  const double lowest_period = 1.0 / stack.lowest();
  const double max_step = (1.0 / stack.highest()) / 20.0;
  double step = search.grid_step.value_or(std::min(lowest_period / 1000.0, max_step));
  if (!(step > 0.0) || step > max_step) {
    throw UsageError("grid step must be positive and at most 1/20 of the highest period");
  }

  const double k = static_cast<double>(stack.size());
  const double peak = 0.5 * k;
  const double eps = 1e-9 * k;
  // Lower bound on rho within one step of an exact peak: cos(x) >= 1 - x^2/2.
  double slack = 0.0;
  for (double f : stack.frequencies()) {
    const double w = 2.0 * std::numbers::pi * f * step;
    slack += 0.25 * w * w;
  }

  const auto last = static_cast<long>(std::ceil(search.horizon_periods * lowest_period / step)) + 1;
  double prev = peak;
  double cur = autocorrelation(stack, step);
  for (long i = 1; i <= last; ++i) {
    const double next = autocorrelation(stack, static_cast<double>(i + 1) * step);
    if (cur >= prev && cur >= next && cur >= peak - slack - eps) {
      const double center = static_cast<double>(i) * step;
      const double tau = golden_section_max(stack, center - step, center + step);
      if (autocorrelation(stack, tau) >= peak - eps &&
          tau <= search.horizon_periods * lowest_period * (1.0 + 1e-9)) {
        return tau;
      }
    }
    prev = cur;
    cur = next;
  }
  return std::nullopt;
}

}  // namespace harmony
