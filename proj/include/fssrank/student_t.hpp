#pragma once

// Student's t distribution via the regularized incomplete beta function.
// The continued fraction is evaluated with the modified Lentz method and
// iterated to machine precision, so p-values are exact to within a few ulps
// rather than normal approximations.

namespace fssrank {

// Regularized incomplete beta I_x(a, b), a > 0, b > 0, x in [0, 1].
double regularized_incomplete_beta(double a, double b, double x);

// P(T <= t) for Student's t with df degrees of freedom (df > 0).
double student_t_cdf(double t, double df);

// Two-sided p-value P(|T| >= |t|).
double student_t_two_sided_p(double t, double df);

// Significance stars as used in the report tables:
// "***" p < 0.01, "**" p < 0.05, "*" p < 0.10, "" otherwise.
// Thresholds are half-open: p = 0.01 gives "**", p = 0.05 gives "*".
const char* significance_stars(double p);

}  // namespace fssrank
