#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nico/sequence.hpp"
#include "nico/surd.hpp"

namespace nico {

/// Dense univariate polynomial over Q, coefficients in ascending order.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rat> coeffs, std::string var = "t");

    static RatPolynomial constant(const Rat& c, std::string var = "t");

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat coeff(long i) const;
    Rat leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    Rat eval(const Rat& x) const;
    QuadSurd eval(const QuadSurd& x) const;

    RatPolynomial operator-() const;
    RatPolynomial& operator+=(const RatPolynomial& o);
    RatPolynomial& operator-=(const RatPolynomial& o);
    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(const Rat& c, const RatPolynomial& p);
    friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RatPolynomial& a, const RatPolynomial& b) { return !(a == b); }

    RatPolynomial derivative() const;

    /// "c0 + c1*t + c2*t^2" style text, zero terms skipped.
    std::string str() const;

private:
    void trim();

    std::vector<Rat> coeffs_;
    std::string var_ = "t";
};

/// Factorization of the rational-root part of a polynomial.  `residual` is
/// what remains after deflating every rational root; when it is quadratic
/// with positive nonsquare discriminant the two conjugate roots land in
/// `surd_roots`, and `complex_pair` marks a negative quadratic discriminant.
struct RootReport {
    std::vector<std::pair<Rat, long>> rational_roots;  // (root, multiplicity)
    std::vector<QuadSurd> surd_roots;
    RatPolynomial residual;
    bool complex_pair = false;
};

RootReport rational_roots(const RatPolynomial& p);

/// Discriminant of a quadratic or cubic; throws for other degrees.
Rat discriminant(const RatPolynomial& p);

/// nu(s + t) as a cubic in t; requires every element rational.
RatPolynomial nu_translate_poly(const Sequence& s);
/// nu after translating only the selected elements by t.
RatPolynomial nu_subset_translate_poly(const Sequence& s, const Selector& sel);
/// nu after scaling only the selected elements by x.
RatPolynomial nu_scale_subset_poly(const Sequence& s, const Selector& sel);
/// nu of s with one extra element x adjoined.
RatPolynomial nu_adjoin_one_poly(const Sequence& s);

/// Taylor coefficients of num/den at 0 through x^order; den(0) must be nonzero.
std::vector<Rat> series_expand(const RatPolynomial& num, const RatPolynomial& den, long order);

}  // namespace nico
