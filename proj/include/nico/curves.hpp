#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nico/decimal.hpp"
#include "nico/sequence.hpp"
#include "nico/surd.hpp"

namespace nico {

/// Sparse bivariate polynomial over Q in the adjoined pair (a, b),
/// coefficients keyed by (degree in a, degree in b).
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly term(long i, long j, const Rat& v);

    void add_term(long i, long j, const Rat& v);
    Rat coeff(long i, long j) const;
    const std::map<std::pair<long, long>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat eval(const Rat& a, const Rat& b) const;
    QuadSurd eval(const QuadSurd& a, const QuadSurd& b) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
    friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
    friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
    friend BiPoly operator*(const Rat& c, const BiPoly& p);
    friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const BiPoly& x, const BiPoly& y) { return !(x == y); }

    BiPoly partial_a() const;
    BiPoly partial_b() const;

    /// Signed-term join, higher total degree first.
    std::string str() const;

private:
    std::map<std::pair<long, long>, Rat> terms_;
};

/// nu(join(s, {a, b})) as a polynomial in the adjoined pair; the base
/// sequence must have rational sum and nu.
BiPoly adjoin_cubic(const Sequence& s);
/// nu(join(s, {a, b})) evaluated directly; works for surd scalars too.
QuadSurd adjoin_two_eval(const Sequence& s, const QuadSurd& a, const QuadSurd& b);
/// a^2 - a + b^2 - b - a*b - 2c with c = sum(s); requires nu(s) = 0.
BiPoly quadratic_factor(const Sequence& s);
/// adjoin_cubic(s) == -(a+b) * quadratic_factor(s) as polynomials.
bool factorization_check(const Sequence& s);

/// Eccentricity of the conic q = 0 for the quadratic-factor shape.  The
/// locus is a circle-free ellipse whenever c > -1/2; below that it is a
/// single point or empty and a std::domain_error is thrown.
QuadSurd ellipse_eccentricity(const BiPoly& q);

/// {1,2,3,3,3,5,5,6,7,9,10,12} and {1,...,11}: distinct nu = 0 sequences
/// sharing the sum 66.
Sequence sigma_one();
Sequence sigma_two();

struct ProductFamilyReport {
    long n = 0;
    long count = 0;
    bool distinct = false;
    bool all_nu_zero = false;
    bool sums_match = false;
    bool same_factor = false;
    bool pass = false;
};
/// All n-fold bag products of sigma_one/sigma_two: n+1 distinct sequences,
/// each with nu = 0, sum 66^n, and one shared quadratic factor.
ProductFamilyReport same_quadratic_products(long n);

/// {1, 2, 2, 3, ..., n}; requires n >= 3.
Sequence w_sequence(long n);
/// nu(w_n) = 2(n^2 + n - 2).
Int w_nu(long n);

/// (1/4)(a+b) * nu(w_n; a, b) matches the cubic normal form
/// -3y^2 + (1/16)(2u+n+2) P_n(u) under u = (a+b-n-2)/2, y = (a^2-b^2)/4,
/// checked exactly on a 5x5 rational grid.
bool weierstrass_check(long n);

struct IntegerPoint {
    long a = 0;
    long b = 0;
    std::string component;  // "oval" or "branch"
};
/// All integer (a, b) in [-box, box]^2 with nu(w_n; a, b) = 0, sorted.
std::vector<IntegerPoint> integer_points(long n, long box);

struct SampledPoint {
    Rat a;
    FixedDecimal b;
    bool exact = false;  // b is an exact rational root
    Rat b_exact;         // set when exact
    std::string component;
};
struct CurvePointSet {
    long n = 0;
    std::vector<SampledPoint> points;
};
/// Real points of nu(w_n; a, b) = 0 for a = a_lo, a_lo+step, ..., <= a_hi.
/// Rational roots in b are exact; the rest are bisected until the residual
/// drops below 1e-8 and printed at the requested precision.
CurvePointSet curve_sample(long n, const Rat& a_lo, const Rat& a_hi, const Rat& step, long precision);

/// Smallest t > 0 with nu(w_n; -1 + t*dx, -1 + t*dy) = 0: the exit point
/// of the ray from (-1,-1) through the oval boundary.
FixedDecimal oval_radius(long n, long dx, long dy, long precision);

struct CurveGeometryReport {
    long n = 0;
    bool center_value = false;             // nu(w_n; -1, -1) = -6
    bool base_points = false;              // (0,-2) and (-2,0) lie on every curve
    bool line_section = false;             // restriction to a+b = -2 is 6a(a+2)
    bool center_gradient_diagonal = false; // gradient at (-1,-1) parallel to (1,1)
    bool asymptote_window = false;         // branch point at a = 100 has |a+b| < 1/10
    bool pass = false;
};
CurveGeometryReport tangency_and_asymptote_check(long n);

}  // namespace nico
