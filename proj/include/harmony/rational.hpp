#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace harmony {

// Overflow-checked 64-bit helpers. All throw OverflowError instead of
// wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, unsigned exponent);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Smallest positive integer divisible by every value. Throws UsageError on an
// empty list or a value < 1.
std::int64_t lcm_many(std::span<const std::int64_t> values);

// Exact positive ratio a/b, always stored in lowest terms.
class Fraction {
 public:
  Fraction() = default;
  // Reduces on construction. Both parts must be >= 1.
  Fraction(std::int64_t numerator, std::int64_t denominator);

  static Fraction integer(std::int64_t n) { return Fraction(n, 1); }
  // Parses "a/b" or "a".
  static Fraction parse(const std::string& text);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }
  double to_double() const {
    return static_cast<double>(numerator_) / static_cast<double>(denominator_);
  }
  std::string to_string() const;

  friend Fraction operator*(const Fraction& lhs, const Fraction& rhs);
  friend Fraction operator/(const Fraction& lhs, const Fraction& rhs);
  friend Fraction operator+(const Fraction& lhs, const Fraction& rhs);

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& lhs, const Fraction& rhs);

 private:
  std::int64_t numerator_ = 1;
  std::int64_t denominator_ = 1;
};

// Search bound in the Stern-Brocot procedure. Unlike Fraction it may be 0/1.
struct Bound {
  std::int64_t numerator;
  std::int64_t denominator;
  friend bool operator==(const Bound&, const Bound&) = default;
};

// One mediant evaluation: mediant = (left.num + right.num) / (left.den + right.den).
struct MediantStep {
  Bound left;
  Bound right;
  Fraction mediant;
};

struct ApproximationTrace {
  double target = 0.0;
  double precision = 0.0;
  std::vector<MediantStep> steps;
  Fraction result;
};

// Accelerated Stern-Brocot search for the fraction with the smallest
// denominator inside [(1-p)x, (1+p)x]. Requires x > 0 and 0 < p < 1.
ApproximationTrace approximate(double x, double precision);
// Same search with exact rational comparisons.
ApproximationTrace approximate(const Fraction& x, const Fraction& precision);

// Plain (unaccelerated) mediant bisection between 0/1 and 1/1 towards x,
// stopping early on an exact hit. Requires 0 < x < 1.
std::vector<Fraction> mediant_sequence(double x, int steps);
std::vector<Fraction> mediant_sequence(const Fraction& x, int steps);

struct PrimePower {
  std::int64_t prime;
  int multiplicity;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Ascending by prime; empty for n = 1. Throws UsageError for n < 1.
std::vector<PrimePower> prime_factors(std::int64_t n);

}  // namespace harmony
