#pragma once

#include <span>
#include <vector>

namespace harmony {

// Ranks starting at 1; tied values share the mean of the positions they
// occupy. With ascending = false the largest value gets rank 1.
std::vector<double> rank_with_ties(std::span<const double> values, bool ascending = true);

// Product-moment correlation. Requires equal lengths >= 3 (UsageError) and
// nonzero variance on both sides (UndefinedMeasureError).
double pearson(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b) via Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// P(T > t) for Student's t with the given degrees of freedom.
double student_t_upper_tail(double t, double degrees_of_freedom);

// One-sided p-value for H1: correlation > 0, using
// r sqrt(n-2) / sqrt(1-r^2) ~ t(n-2). |r| = 1 yields 0 for r = 1 and 1 for
// r = -1. Throws UsageError for n < 3.
double significance(double r, int n);

}  // namespace harmony
