#pragma once

// Quadrature-based Student-t tail oracle, long double throughout. Integrates
// the density directly (adaptive Simpson), so it shares no code path with
// the incomplete-beta implementation it is used to check.

namespace fssrank::ref {

// P(T > t) for t >= 0, df > 0.
long double student_t_tail_quadrature(long double t, long double df);

// Two-sided P(|T| >= |t|).
long double student_t_two_sided_p_quadrature(long double t, long double df);

}  // namespace fssrank::ref
