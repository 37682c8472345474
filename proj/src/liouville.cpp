#include "nico/liouville.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nico/sequence.hpp"

namespace nico {

namespace {

struct FrCoeffs {
    Rat f1, f0;
};

FrCoeffs fr_coeffs(const std::vector<long>& factors) {
    Rat n = 1, s1 = 1, s1_over_n = 1, s2_over_n = 1;
    for (long m : factors) {
        if (m < 1) throw std::invalid_argument("shape exponents must be nonnegative");
        n *= m;
        s1 *= Rat(m) * (m + 1) / 2;
        s1_over_n *= Rat(m + 1) / 2;
        s2_over_n *= Rat(m + 1) * (2 * m + 1) / 6;
    }
    return FrCoeffs{-n + 3 * s1_over_n, -2 * s1 + 3 * s2_over_n};
}

std::vector<long> shape_factors(const DivisorShape& shape) {
    std::vector<long> f;
    f.reserve(shape.alphas.size());
    for (long a : shape.alphas) {
        if (a < 0) throw std::invalid_argument("shape exponents must be nonnegative");
        f.push_back(a + 1);
    }
    return f;
}

/// Larger root of x^2 + f1 x + f0, to `precision` digits.
FixedDecimal monic_larger_root(const FrCoeffs& f, long precision) {
    Rat disc = f.f1 * f.f1 - 4 * f.f0;
    return (FixedDecimal::of(-f.f1, precision) + FixedDecimal::sqrt_of(disc, precision)).div_long(2);
}

TrendReport make_trend(std::vector<FixedDecimal> values, long order, const QuadSurd& limit, long first_k,
                       long precision, const Rat& tol) {
    auto diffs = finite_differences(std::move(values), order);
    TrendReport rep;
    rep.target = FixedDecimal::of(limit, precision);
    std::size_t keep = std::min<std::size_t>(10, diffs.size());
    for (std::size_t i = diffs.size() - keep; i < diffs.size(); ++i) {
        long k = first_k + static_cast<long>(i) + order;
        rep.samples.push_back(TrendSample{k, diffs[i], (diffs[i] - rep.target).abs()});
    }
    bool shrinking = !rep.samples.empty();
    for (std::size_t i = 1; i < rep.samples.size(); ++i)
        if (rep.samples[i].error > rep.samples[i - 1].error) shrinking = false;
    rep.pass = shrinking && rep.samples.back().error < FixedDecimal::of(tol, precision);
    return rep;
}

using I128 = __int128;

bool shape_sum_checks(const std::vector<long>& elems, const std::vector<long>& factors) {
    I128 s1 = 0, s2 = 0, s3 = 0;
    for (long e : elems) {
        I128 sq = static_cast<I128>(e) * e;
        s1 += e;
        s2 += sq;
        s3 += sq * e;
    }
    if (s1 * s1 != s3) return false;
    I128 n = static_cast<I128>(elems.size());
    I128 pow2 = 1, pow6 = 1, prod1 = 1, prod2 = 1;
    for (long m : factors) {
        pow2 *= 2;
        pow6 *= 6;
        prod1 *= m + 1;
        prod2 *= static_cast<I128>(m + 1) * (2 * m + 1);
    }
    return pow2 * s1 == n * prod1 && pow6 * s2 == n * prod2;
}

}  // namespace

Int shape_size(const DivisorShape& shape) {
    Int n = 1;
    for (long a : shape.alphas) {
        if (a < 0) throw std::invalid_argument("shape exponents must be nonnegative");
        n *= a + 1;
    }
    return n;
}

RatPolynomial f_r_poly(const DivisorShape& shape) {
    FrCoeffs f = fr_coeffs(shape_factors(shape));
    return RatPolynomial({f.f0, f.f1, 1}, "t");
}

bool divisor_translate_identity_check(const DivisorShape& shape) {
    Sequence seq = divisor_tau_sequence(shape.alphas);
    RatPolynomial lhs = nu_translate_poly(seq);
    RatPolynomial t({0, 1}, "t");
    Rat n(shape_size(shape));
    RatPolynomial rhs = (-n) * (t * f_r_poly(shape));
    return lhs == rhs;
}

QuadSurd rightmost_root(const DivisorShape& shape) {
    FrCoeffs f = fr_coeffs(shape_factors(shape));
    Rat disc = f.f1 * f.f1 - 4 * f.f0;
    if (disc <= 0) throw std::domain_error("rightmost root needs a positive discriminant");
    QuadSurd root = *QuadSurd::sqrt(QuadSurd(disc));
    return (QuadSurd(-f.f1) + root) / QuadSurd(2);
}

DivisorSweep divisor_identity_sweep(long product_bound) {
    if (product_bound < 1) throw std::invalid_argument("product bound must be positive");
    DivisorSweep result{0, true};
    std::vector<long> factors;
    std::vector<long> elems{1};
    std::function<void(long)> extend = [&](long min_factor) {
        long n = static_cast<long>(elems.size());
        for (long m = min_factor; n * m <= product_bound; ++m) {
            std::vector<long> saved;
            saved.reserve(elems.size() * m);
            for (long e : elems)
                for (long c = 1; c <= m; ++c) saved.push_back(e * c);
            std::swap(elems, saved);
            factors.push_back(m);
            ++result.shapes;
            if (!shape_sum_checks(elems, factors)) result.pass = false;
            extend(m);
            factors.pop_back();
            std::swap(elems, saved);
        }
    };
    extend(2);
    return result;
}

QuadSurd equal_exponent_limit(long r) {
    if (r == 2) return QuadSurd(3, 1, 105, 12);
    if (r == 3) return QuadSurd(15, 1, 545, 8);
    throw std::invalid_argument("equal-exponent limit known for r = 2 and 3 only");
}

QuadSurd truncation_limit(long r) {
    // r = 1 excluded: there the rightmost root is constantly -1 and the
    // first differences collapse to 0.
    if (r < 2) throw std::invalid_argument("truncation limit needs r >= 2");
    Int d = 3 * (5 * Int(r) + 1) * (7 * Int(r) - 5);
    return QuadSurd(3 * (Int(r) - 3), 1, d, 24);
}

QuadSurd rescaled_limit() { return QuadSurd(3, 1, 105, 24); }

TrendReport difference_limit_probe(long r, long k_max, long precision, const Rat& tol) {
    QuadSurd limit = equal_exponent_limit(r);
    if (k_max <= r) throw std::invalid_argument("need more samples than the difference order");
    std::vector<FixedDecimal> values;
    values.reserve(k_max);
    for (long k = 1; k <= k_max; ++k) {
        std::vector<long> factors(r, k + 1);
        values.push_back(monic_larger_root(fr_coeffs(factors), precision));
    }
    return make_trend(std::move(values), r, limit, 1, precision, tol);
}

TrendReport truncation_first_difference(long r, long m_max, long precision, const Rat& tol) {
    QuadSurd limit = truncation_limit(r);
    if (m_max < 2) throw std::invalid_argument("need at least two samples");
    std::vector<FixedDecimal> values;
    values.reserve(m_max);
    for (long m = 1; m <= m_max; ++m) values.push_back(monic_larger_root(fr_coeffs({m, r}), precision));
    return make_trend(std::move(values), 1, limit, 1, precision, tol);
}

RatPolynomial rescaled_minpoly(long m) {
    if (m < 1) throw std::invalid_argument("family index must be positive");
    Rat mm(m);
    return RatPolynomial({-mm * (m + 1) * (m + 2) / 3, -(mm - 2) * (m + 1) / 2, 2 * (mm + 1)}, "x");
}

RatPolynomial rescaled_family_in_m(const Rat& x) {
    return RatPolynomial({x + 2 * x * x, Rat(-2, 3) + x / 2 + 2 * x * x, -1 - x / 2, Rat(-1, 3)}, "m");
}

Rat rescaled_disc_in_x(long m) {
    Rat mm(m);
    return (mm + 1) * (m + 1) * (5 * mm + 6) * (7 * mm + 2) / 12;
}

RatPolynomial rescaled_disc_in_m() {
    RatPolynomial a({2, 9, 12}, "x");
    RatPolynomial b({16, 72, 105}, "x");
    return Rat(1, 1296) * (a * a * b);
}

bool rescaled_discriminant_checks() {
    for (long m = 1; m <= 12; ++m)
        if (discriminant(rescaled_minpoly(m)) != rescaled_disc_in_x(m)) return false;
    RatPolynomial closed = rescaled_disc_in_m();
    for (long i = 0; i <= 10; ++i) {
        Rat x(i - 3, 2);
        if (discriminant(rescaled_family_in_m(x)) != closed.eval(x)) return false;
    }
    return true;
}

TrendReport rescaled_root_difference_limit(long m_max, long precision, const Rat& tol) {
    if (m_max < 2) throw std::invalid_argument("need at least two samples");
    std::vector<FixedDecimal> values;
    values.reserve(m_max);
    for (long m = 1; m <= m_max; ++m) {
        RatPolynomial q = rescaled_minpoly(m);
        Rat a = q.coeff(2);
        values.push_back(monic_larger_root(FrCoeffs{q.coeff(1) / a, q.coeff(0) / a}, precision));
    }
    return make_trend(std::move(values), 1, rescaled_limit(), 1, precision, tol);
}

}  // namespace nico
