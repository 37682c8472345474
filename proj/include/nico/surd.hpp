#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace nico {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact element of Q(sqrt(d)): value = (p + q*sqrt(d)) / r.
///
/// Canonical form: d squarefree and nonnegative, r > 0, gcd(p, q, r) = 1,
/// and q == 0 forces d == 0.  d == 0 (with q == 0) is the rational case.
/// Arithmetic is closed for operands sharing one d; rationals (d == 0) mix
/// with any field.  Mixing two distinct irrational fields throws.
class QuadSurd {
public:
    QuadSurd() : p_(0), q_(0), d_(0), r_(1) {}
    QuadSurd(long v) : p_(v), q_(0), d_(0), r_(1) {}
    QuadSurd(const Int& v) : p_(v), q_(0), d_(0), r_(1) {}
    QuadSurd(const Rat& v) : p_(v.get_num()), q_(0), d_(0), r_(v.get_den()) { normalize(); }
    QuadSurd(Int p, Int q, Int d, Int r);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& d() const { return d_; }
    const Int& r() const { return r_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_integer() const { return q_ == 0 && r_ == 1; }
    /// Requires is_rational().
    Rat rational() const;

    int sign() const;
    QuadSurd conjugate() const { return QuadSurd(p_, -q_, d_, r_); }
    /// (p^2 - q^2 d) / r^2, the field norm.
    Rat norm() const;

    QuadSurd operator-() const { return QuadSurd(-p_, -q_, d_, r_); }
    QuadSurd& operator+=(const QuadSurd& o);
    QuadSurd& operator-=(const QuadSurd& o);
    QuadSurd& operator*=(const QuadSurd& o);
    QuadSurd& operator/=(const QuadSurd& o);

    friend QuadSurd operator+(QuadSurd a, const QuadSurd& b) { return a += b; }
    friend QuadSurd operator-(QuadSurd a, const QuadSurd& b) { return a -= b; }
    friend QuadSurd operator*(QuadSurd a, const QuadSurd& b) { return a *= b; }
    friend QuadSurd operator/(QuadSurd a, const QuadSurd& b) { return a /= b; }

    friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_ && a.r_ == b.r_;
    }
    friend bool operator!=(const QuadSurd& a, const QuadSurd& b) { return !(a == b); }
    friend bool operator<(const QuadSurd& a, const QuadSurd& b) { return compare(a, b) < 0; }
    friend bool operator<=(const QuadSurd& a, const QuadSurd& b) { return compare(a, b) <= 0; }
    friend bool operator>(const QuadSurd& a, const QuadSurd& b) { return compare(a, b) > 0; }
    friend bool operator>=(const QuadSurd& a, const QuadSurd& b) { return compare(a, b) >= 0; }

    /// Exact order comparison; sign of a - b.
    static int compare(const QuadSurd& a, const QuadSurd& b);

    /// Principal square root if it exists within a quadratic field:
    /// rational inputs land in Q(sqrt(d')) for the squarefree core d';
    /// surd inputs are resolved within their own Q(sqrt(d)) via the norm.
    /// Returns nullopt for negative inputs or roots of degree 4.
    static std::optional<QuadSurd> sqrt(const QuadSurd& x);

    /// a + b*sqrt(d) from rational parts.
    static QuadSurd make(const Rat& a, const Rat& b, const Int& d);

    /// "p/q" for rationals (q omitted when 1), "(p+q*sqrt(d))/r" otherwise.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadSurd& s);

private:
    void normalize();
    Int p_, q_, d_, r_;
};

/// Largest s with s^2 | n, so n = s^2 * core with core squarefree (n >= 0).
struct SquarefreeSplit {
    Int root;
    Int core;
};
SquarefreeSplit squarefree_split(const Int& n);

/// Exact rational square root: sqrt(x) as a rational if x is a perfect
/// square (numerator and denominator both squares), else nullopt.
std::optional<Rat> exact_sqrt(const Rat& x);
inline bool is_perfect_square(const Rat& x) { return exact_sqrt(x).has_value(); }

}  // namespace nico
