#pragma once

#include <string>
#include <vector>

#include "nico/surd.hpp"

namespace nico {

/// Fixed-point decimal: value = mantissa / 10^precision.  All construction
/// rounds to nearest, so conversions carry error below 10^-precision.
/// Arithmetic requires matching precisions; square roots avoid hardware
/// floating point entirely (integer Newton via GMP).
class FixedDecimal {
public:
    FixedDecimal() : mant_(0), prec_(0) {}
    FixedDecimal(Int mantissa, long precision);

    static FixedDecimal of(const Rat& x, long precision);
    static FixedDecimal of(const QuadSurd& x, long precision);
    /// sqrt(x) for x >= 0; throws std::domain_error on negative input.
    static FixedDecimal sqrt_of(const Rat& x, long precision);

    const Int& mantissa() const { return mant_; }
    long precision() const { return prec_; }

    FixedDecimal operator-() const { return FixedDecimal(-mant_, prec_); }
    FixedDecimal abs() const { return FixedDecimal(::abs(mant_), prec_); }
    FixedDecimal& operator+=(const FixedDecimal& o);
    FixedDecimal& operator-=(const FixedDecimal& o);
    friend FixedDecimal operator+(FixedDecimal a, const FixedDecimal& b) { return a += b; }
    friend FixedDecimal operator-(FixedDecimal a, const FixedDecimal& b) { return a -= b; }
    /// Rounded product at the shared precision.
    FixedDecimal mul(const FixedDecimal& o) const;
    FixedDecimal div_long(long d) const;

    static int compare(const FixedDecimal& a, const FixedDecimal& b);
    friend bool operator==(const FixedDecimal& a, const FixedDecimal& b) { return compare(a, b) == 0; }
    friend bool operator!=(const FixedDecimal& a, const FixedDecimal& b) { return compare(a, b) != 0; }
    friend bool operator<(const FixedDecimal& a, const FixedDecimal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const FixedDecimal& a, const FixedDecimal& b) { return compare(a, b) <= 0; }
    friend bool operator>(const FixedDecimal& a, const FixedDecimal& b) { return compare(a, b) > 0; }
    friend bool operator>=(const FixedDecimal& a, const FixedDecimal& b) { return compare(a, b) >= 0; }

    Rat to_rat() const;
    /// Plain fixed-point text, e.g. "1.1039087902" at precision 10.
    std::string str() const;

private:
    Int mant_;
    long prec_;
};

/// Decimal approximation of an exact surd; error < 10^-precision.
inline FixedDecimal surd_value(const QuadSurd& q, long precision) {
    return FixedDecimal::of(q, precision);
}

/// r-th forward differences; requires values.size() > order.
std::vector<FixedDecimal> finite_differences(std::vector<FixedDecimal> values, long order);

}  // namespace nico
