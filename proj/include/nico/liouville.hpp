#pragma once

#include <vector>

#include "nico/decimal.hpp"
#include "nico/poly.hpp"
#include "nico/surd.hpp"

namespace nico {

/// Prime-exponent shape (a_1, ..., a_r) of a squarefull template; the
/// attached sequence lists tau(e) over the divisors e of p_1^a_1...p_r^a_r.
struct DivisorShape {
    std::vector<long> alphas;
};

/// Number of divisors, prod (a_i + 1).
Int shape_size(const DivisorShape& shape);

/// Monic quadratic f(t) with nu of the translated divisor sequence equal to
/// -N * t * f(t), N = shape_size.
RatPolynomial f_r_poly(const DivisorShape& shape);

/// Exact polynomial identity check for one shape.
bool divisor_translate_identity_check(const DivisorShape& shape);

/// Larger root of f_r; throws std::domain_error when the discriminant is
/// not positive.
QuadSurd rightmost_root(const DivisorShape& shape);

/// Sweep every shape with size <= product_bound (factors >= 2,
/// nondecreasing), validating nu = 0 plus the power-sum closed forms that
/// make the translation identity hold.
struct DivisorSweep {
    long shapes = 0;
    bool pass = false;
};

DivisorSweep divisor_identity_sweep(long product_bound);

/// Convergence record: the probe passes when the final error beats the
/// tolerance and the error is nonincreasing across the kept tail.
struct TrendSample {
    long k;
    FixedDecimal value, error;
};

struct TrendReport {
    FixedDecimal target;
    std::vector<TrendSample> samples;
    bool pass = false;
};

/// Limit of the order-r differences of the rightmost root over shapes
/// (k, ..., k) with r entries; known for r = 2 and 3.
QuadSurd equal_exponent_limit(long r);
/// Limit of the first differences over shapes (m-1, r-1) as m grows.
QuadSurd truncation_limit(long r);
/// Limit shared by the rescaled family's root differences.
QuadSurd rescaled_limit();

TrendReport difference_limit_probe(long r, long k_max, long precision, const Rat& tol);
TrendReport truncation_first_difference(long r, long m_max, long precision, const Rat& tol);

/// Rescaled quadratic family q_m(x) = 2(m+1)x^2 - (m-2)(m+1)/2 x
/// - m(m+1)(m+2)/3 and its cross-sections.
RatPolynomial rescaled_minpoly(long m);
RatPolynomial rescaled_family_in_m(const Rat& x);
/// Discriminant of rescaled_minpoly(m) in closed form.
Rat rescaled_disc_in_x(long m);
/// Discriminant of the cubic cross-section in m, as a polynomial in x.
RatPolynomial rescaled_disc_in_m();
/// Exact sampling confirmation of both discriminant closed forms.
bool rescaled_discriminant_checks();

TrendReport rescaled_root_difference_limit(long m_max, long precision, const Rat& tol);

}  // namespace nico
