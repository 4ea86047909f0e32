#include "harmony/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "harmony/errors.hpp"

namespace harmony {

namespace {

__extension__ using int128 = __int128;

constexpr long kMaxIterations = 1'000'000;

std::int64_t narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("integer overflow in rational arithmetic");
  }
  return static_cast<std::int64_t>(v);
}

// Comparisons against xmin = (1-p)x and xmax = (1+p)x in floating point.
struct DoubleBounds {
  double x;
  double xmin;
  double xmax;

  std::int64_t floor_x() const {
    const double f = std::floor(x);
    if (f > 9.0e15) throw UsageError("approximate: value too large");
    return static_cast<std::int64_t>(f);
  }
  bool above_max(std::int64_t a, std::int64_t b) const {
    return static_cast<double>(a) > xmax * static_cast<double>(b);
  }
  bool below_min(std::int64_t a, std::int64_t b) const {
    return static_cast<double>(a) < xmin * static_cast<double>(b);
  }
  // floor((ar - xmax*br) / (xmax*bl - al))
  std::int64_t right_steps(Bound l, Bound r) const {
    const double num = static_cast<double>(r.numerator) - xmax * static_cast<double>(r.denominator);
    const double den = xmax * static_cast<double>(l.denominator) - static_cast<double>(l.numerator);
    return to_count(num / den);
  }
  // floor((xmin*bl - al) / (ar - xmin*br))
  std::int64_t left_steps(Bound l, Bound r) const {
    const double num = xmin * static_cast<double>(l.denominator) - static_cast<double>(l.numerator);
    const double den = static_cast<double>(r.numerator) - xmin * static_cast<double>(r.denominator);
    return to_count(num / den);
  }
  static std::int64_t to_count(double q) {
    if (!std::isfinite(q) || q > 9.0e18) throw OverflowError("approximate: step count overflow");
    return static_cast<std::int64_t>(std::floor(q));
  }
};

// Exact comparisons: xmin = lo_num/den_common, xmax = hi_num/den_common.
struct ExactBounds {
  Fraction x;
  int128 lo_num;
  int128 hi_num;
  int128 den;

  std::int64_t floor_x() const { return x.numerator() / x.denominator(); }
  bool above_max(std::int64_t a, std::int64_t b) const {
    return int128{a} * den > hi_num * b;
  }
  bool below_min(std::int64_t a, std::int64_t b) const {
    return int128{a} * den < lo_num * b;
  }
  std::int64_t right_steps(Bound l, Bound r) const {
    const int128 num = int128{r.numerator} * den - hi_num * r.denominator;
    const int128 d = hi_num * l.denominator - int128{l.numerator} * den;
    return narrow(num / d);
  }
  std::int64_t left_steps(Bound l, Bound r) const {
    const int128 num = lo_num * l.denominator - int128{l.numerator} * den;
    const int128 d = int128{r.numerator} * den - lo_num * r.denominator;
    return narrow(num / d);
  }
};

// from + k * toward, componentwise.
Bound advance(Bound from, Bound toward, std::int64_t k) {
  return {checked_add(from.numerator, checked_mul(k, toward.numerator)),
          checked_add(from.denominator, checked_mul(k, toward.denominator))};
}

template <typename Bounds>
bool inside(const Bounds& bounds, std::int64_t a, std::int64_t b) {
  return !bounds.above_max(a, b) && !bounds.below_min(a, b);
}

template <typename Bounds>
ApproximationTrace run_stern_brocot(const Bounds& bounds, ApproximationTrace trace) {
  const std::int64_t base = bounds.floor_x();
  Bound left{base, 1};
  Bound right{checked_add(base, 1), 1};

  // The initial integers are candidates with denominator 1.
  if (left.numerator > 0 && inside(bounds, left.numerator, 1)) {
    trace.result = Fraction::integer(left.numerator);
    return trace;
  }
  if (inside(bounds, right.numerator, 1)) {
    trace.result = Fraction::integer(right.numerator);
    return trace;
  }

  for (long iter = 0; iter < kMaxIterations; ++iter) {
    const std::int64_t am = checked_add(left.numerator, right.numerator);
    const std::int64_t bm = checked_add(left.denominator, right.denominator);
    trace.steps.push_back({left, right, Fraction(am, bm)});
    if (inside(bounds, am, bm)) {
      trace.result = Fraction(am, bm);
      return trace;
    }
    if (bounds.above_max(am, bm)) {
      // k >= 1 in exact arithmetic; clamp against rounding in the double path.
      std::int64_t k = std::max<std::int64_t>(bounds.right_steps(left, right), 1);
      Bound next = advance(right, left, k);
      while (k > 1 && bounds.below_min(next.numerator, next.denominator)) next = advance(right, left, --k);
      right = next;
      if (inside(bounds, right.numerator, right.denominator)) {
        trace.result = Fraction(right.numerator, right.denominator);
        return trace;
      }
    } else {
      std::int64_t k = std::max<std::int64_t>(bounds.left_steps(left, right), 1);
      Bound next = advance(left, right, k);
      while (k > 1 && bounds.above_max(next.numerator, next.denominator)) next = advance(left, right, --k);
      left = next;
      if (inside(bounds, left.numerator, left.denominator)) {
        trace.result = Fraction(left.numerator, left.denominator);
        return trace;
      }
    }
  }
  throw UsageError("approximate: no fraction found within 1000000 iterations; precision too small");
}

template <typename Below, typename Equal>
std::vector<Fraction> bisect(int steps, Below below, Equal equal) {
  if (steps < 0) throw UsageError("mediant_sequence: steps must be >= 0");
  std::vector<Fraction> out;
  Bound left{0, 1};
  Bound right{1, 1};
  for (int i = 0; i < steps; ++i) {
    const Bound m{left.numerator + right.numerator, left.denominator + right.denominator};
    out.emplace_back(m.numerator, m.denominator);
    if (equal(m)) break;
    if (below(m)) {
      left = m;
    } else {
      right = m;
    }
  }
  return out;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

std::int64_t checked_pow(std::int64_t base, unsigned exponent) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw UsageError("lcm: arguments must be positive");
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t lcm_many(std::span<const std::int64_t> values) {
  if (values.empty()) throw UsageError("lcm_many: empty list");
  std::int64_t out = 1;
  for (std::int64_t v : values) out = lcm(out, v);
  return out;
}

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (numerator < 1 || denominator < 1) {
    throw UsageError("fraction parts must be positive, got " + std::to_string(numerator) + "/" +
                     std::to_string(denominator));
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  numerator_ = numerator / g;
  denominator_ = denominator / g;
}

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Fraction(n, 1);
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const long long a = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const long long b = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    return Fraction(a, b);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed fraction '" + text + "'", text, 0);
  }
}

std::string Fraction::to_string() const {
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

Fraction operator*(const Fraction& lhs, const Fraction& rhs) {
  // Cross-reduce first to keep intermediates small.
  const std::int64_t g1 = std::gcd(lhs.numerator_, rhs.denominator_);
  const std::int64_t g2 = std::gcd(rhs.numerator_, lhs.denominator_);
  return Fraction(checked_mul(lhs.numerator_ / g1, rhs.numerator_ / g2),
                  checked_mul(lhs.denominator_ / g2, rhs.denominator_ / g1));
}

Fraction operator/(const Fraction& lhs, const Fraction& rhs) {
  return lhs * Fraction(rhs.denominator_, rhs.numerator_);
}

Fraction operator+(const Fraction& lhs, const Fraction& rhs) {
  const std::int64_t d = lcm(lhs.denominator_, rhs.denominator_);
  return Fraction(checked_add(checked_mul(lhs.numerator_, d / lhs.denominator_),
                              checked_mul(rhs.numerator_, d / rhs.denominator_)),
                  d);
}

std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs) {
  return int128{lhs.numerator_} * rhs.denominator_ <=> int128{rhs.numerator_} * lhs.denominator_;
}

ApproximationTrace approximate(double x, double precision) {
  if (!(x > 0.0) || !std::isfinite(x)) throw UsageError("approximate: value must be positive");
  if (!(precision > 0.0 && precision < 1.0)) {
    throw UsageError("approximate: precision must lie in (0, 1)");
  }
  ApproximationTrace trace;
  trace.target = x;
  trace.precision = precision;
  return run_stern_brocot(DoubleBounds{x, (1.0 - precision) * x, (1.0 + precision) * x},
                          std::move(trace));
}

ApproximationTrace approximate(const Fraction& x, const Fraction& precision) {
  if (precision >= Fraction::integer(1)) {
    throw UsageError("approximate: precision must lie in (0, 1)");
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 31;
  if (x.numerator() > kLimit || x.denominator() > kLimit || precision.denominator() > kLimit) {
    throw UsageError("approximate: exact inputs must have parts below 2^31");
  }
  const int128 v = precision.denominator();
  const int128 u = precision.numerator();
  ApproximationTrace trace;
  trace.target = x.to_double();
  trace.precision = precision.to_double();
  return run_stern_brocot(
      ExactBounds{x, (v - u) * x.numerator(), (v + u) * x.numerator(), v * x.denominator()},
      std::move(trace));
}

std::vector<Fraction> mediant_sequence(double x, int steps) {
  if (!(x > 0.0 && x < 1.0)) throw UsageError("mediant_sequence: value must lie in (0, 1)");
  return bisect(
      steps,
      [x](Bound m) { return static_cast<double>(m.numerator) < x * static_cast<double>(m.denominator); },
      [x](Bound m) { return static_cast<double>(m.numerator) == x * static_cast<double>(m.denominator); });
}

std::vector<Fraction> mediant_sequence(const Fraction& x, int steps) {
  if (x >= Fraction::integer(1)) throw UsageError("mediant_sequence: value must lie in (0, 1)");
  return bisect(
      steps, [&x](Bound m) { return Fraction(m.numerator, m.denominator) < x; },
      [&x](Bound m) { return Fraction(m.numerator, m.denominator) == x; });
}

std::vector<PrimePower> prime_factors(std::int64_t n) {
  if (n < 1) throw UsageError("prime_factors: argument must be >= 1");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    if (m > 0) out.push_back({p, m});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

}  // namespace harmony
