#include "nico/decimal.hpp"

#include <sstream>
#include <stdexcept>

namespace nico {

namespace {

Int pow10(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

/// n/d rounded to nearest, ties away from zero.  d must be positive.
Int round_div(const Int& n, const Int& d) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * ::abs(r) >= d) q += (n < 0) ? -1 : 1;
    return q;
}

long decimal_digits(const Int& n) {
    return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));
}

void require_nonnegative_precision(long precision) {
    if (precision < 0) throw std::invalid_argument("precision must be nonnegative");
}

void require_same_precision(long a, long b) {
    if (a != b) throw std::invalid_argument("mixed-precision decimal arithmetic");
}

}  // namespace

FixedDecimal::FixedDecimal(Int mantissa, long precision) : mant_(std::move(mantissa)), prec_(precision) {
    require_nonnegative_precision(precision);
}

FixedDecimal FixedDecimal::of(const Rat& x, long precision) {
    require_nonnegative_precision(precision);
    return FixedDecimal(round_div(x.get_num() * pow10(precision), x.get_den()), precision);
}

FixedDecimal FixedDecimal::of(const QuadSurd& x, long precision) {
    require_nonnegative_precision(precision);
    if (x.is_rational()) return of(x.rational(), precision);
    // Work at guard precision so the q * sqrt(d) product cannot promote
    // its last-place error past the requested digits.
    long guard = 10 + decimal_digits(x.q());
    long w = precision + guard;
    Int scaled_root;
    Int arg = x.d() * pow10(2 * w);
    mpz_sqrt(scaled_root.get_mpz_t(), arg.get_mpz_t());
    Int numerator = x.p() * pow10(w) + x.q() * scaled_root;
    return FixedDecimal(round_div(numerator, x.r() * pow10(guard)), precision);
}

FixedDecimal FixedDecimal::sqrt_of(const Rat& x, long precision) {
    require_nonnegative_precision(precision);
    if (x < 0) throw std::domain_error("sqrt_of: negative argument");
    const long guard = 10;
    long w = precision + guard;
    Int arg = x.get_num() * x.get_den() * pow10(2 * w);
    Int scaled_root;
    mpz_sqrt(scaled_root.get_mpz_t(), arg.get_mpz_t());
    return FixedDecimal(round_div(scaled_root, x.get_den() * pow10(guard)), precision);
}

FixedDecimal& FixedDecimal::operator+=(const FixedDecimal& o) {
    require_same_precision(prec_, o.prec_);
    mant_ += o.mant_;
    return *this;
}

FixedDecimal& FixedDecimal::operator-=(const FixedDecimal& o) {
    require_same_precision(prec_, o.prec_);
    mant_ -= o.mant_;
    return *this;
}

FixedDecimal FixedDecimal::mul(const FixedDecimal& o) const {
    require_same_precision(prec_, o.prec_);
    return FixedDecimal(round_div(mant_ * o.mant_, pow10(prec_)), prec_);
}

FixedDecimal FixedDecimal::div_long(long d) const {
    if (d == 0) throw std::domain_error("division by zero");
    Int num = mant_;
    Int den(d);
    if (d < 0) {
        num = -num;
        den = -den;
    }
    return FixedDecimal(round_div(num, den), prec_);
}

int FixedDecimal::compare(const FixedDecimal& a, const FixedDecimal& b) {
    if (a.prec_ == b.prec_) return cmp(a.mant_, b.mant_);
    return cmp(a.mant_ * pow10(b.prec_), b.mant_ * pow10(a.prec_));
}

Rat FixedDecimal::to_rat() const {
    Rat r(mant_, pow10(prec_));
    r.canonicalize();
    return r;
}

std::string FixedDecimal::str() const {
    Int m = ::abs(mant_);
    Int scale = pow10(prec_);
    Int whole = m / scale;
    Int frac = m % scale;
    std::ostringstream out;
    if (mant_ < 0) out << '-';
    out << whole.get_str();
    if (prec_ > 0) {
        std::string digits = frac.get_str();
        out << '.' << std::string(prec_ - static_cast<long>(digits.size()), '0') << digits;
    }
    return out.str();
}

std::vector<FixedDecimal> finite_differences(std::vector<FixedDecimal> values, long order) {
    if (order < 0) throw std::invalid_argument("difference order must be nonnegative");
    if (static_cast<long>(values.size()) <= order)
        throw std::invalid_argument("not enough values for requested difference order");
    for (long pass = 0; pass < order; ++pass) {
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return values;
}

}  // namespace nico
