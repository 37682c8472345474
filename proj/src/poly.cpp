#include "nico/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nico {

namespace {

std::vector<Rat> rational_values(const Sequence& s, const char* what) {
    std::vector<Rat> vals;
    vals.reserve(s.size());
    for (const auto& e : s.sorted()) {
        if (!e.is_rational()) throw std::invalid_argument(std::string(what) + " requires rational elements");
        vals.push_back(e.rational());
    }
    return vals;
}

struct PowerSums {
    Rat s1, s2, s3;
};

PowerSums power_sums(const std::vector<Rat>& vals) {
    PowerSums p{0, 0, 0};
    for (const auto& v : vals) {
        p.s1 += v;
        p.s2 += v * v;
        p.s3 += v * v * v;
    }
    return p;
}

/// Trial-division divisor enumeration; fine for the constants that arise here.
std::vector<Int> divisors(Int n) {
    n = ::abs(n);
    std::vector<Int> ds;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            ds.push_back(i);
            ds.push_back(n / i);
        }
    }
    return ds;
}

/// Divide p by (x - r), assuming r is a root.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
    std::size_t n = c.size() - 1;
    std::vector<Rat> q(n);
    q[n - 1] = c[n];
    for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = c[k] + r * q[k];
    return q;
}

}  // namespace

RatPolynomial::RatPolynomial(std::vector<Rat> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

RatPolynomial RatPolynomial::constant(const Rat& c, std::string var) {
    return RatPolynomial(std::vector<Rat>{c}, std::move(var));
}

void RatPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat RatPolynomial::coeff(long i) const {
    if (i < 0) throw std::invalid_argument("negative coefficient index");
    if (i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Rat RatPolynomial::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

Rat RatPolynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QuadSurd RatPolynomial::eval(const QuadSurd& x) const {
    QuadSurd acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + QuadSurd(*it);
    return acc;
}

RatPolynomial RatPolynomial::operator-() const {
    std::vector<Rat> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(-v);
    return RatPolynomial(std::move(c), var_);
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RatPolynomial({}, a.var());
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPolynomial(std::move(c), a.var());
}

RatPolynomial operator*(const Rat& c, const RatPolynomial& p) {
    std::vector<Rat> out;
    out.reserve(p.coeffs_.size());
    for (const auto& v : p.coeffs_) out.push_back(c * v);
    return RatPolynomial(std::move(out), p.var());
}

RatPolynomial RatPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RatPolynomial({}, var_);
    std::vector<Rat> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    return RatPolynomial(std::move(c), var_);
}

std::string RatPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string power;
        if (k == 1)
            power = var_;
        else if (k > 1)
            power = var_ + "^" + std::to_string(k);
        if (k == 0)
            out << mag.get_str();
        else if (mag == 1)
            out << power;
        else
            out << mag.get_str() << '*' << power;
    }
    return out.str();
}

RootReport rational_roots(const RatPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
    RootReport report;
    std::vector<Rat> c = p.coeffs();

    long zero_mult = 0;
    while (c.size() > 1 && c.front() == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) report.rational_roots.emplace_back(Rat(0), zero_mult);

    if (c.size() > 1) {
        // Candidates p/q from the primitive integer model: p | constant,
        // q | leading.  The same set stays valid after each deflation.
        Int denom_lcm = 1;
        for (const auto& v : c) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<Int> ic;
        ic.reserve(c.size());
        for (const auto& v : c) ic.push_back(Int(v * Rat(denom_lcm)));
        Int content = 0;
        for (const auto& v : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        for (auto& v : ic) v /= content;

        std::set<Rat> candidates;
        for (const auto& dp : divisors(ic.front()))
            for (const auto& dq : divisors(ic.back())) {
                Rat cand(dp, dq);
                cand.canonicalize();
                candidates.insert(cand);
                candidates.insert(-cand);
            }

        for (const auto& cand : candidates) {
            long mult = 0;
            while (c.size() > 1 && RatPolynomial(c).eval(cand) == 0) {
                c = deflate(c, cand);
                ++mult;
            }
            if (mult > 0) report.rational_roots.emplace_back(cand, mult);
        }
    }

    report.residual = RatPolynomial(c, p.var());
    if (report.residual.degree() == 2) {
        Rat a = report.residual.coeff(2), b = report.residual.coeff(1), cc = report.residual.coeff(0);
        Rat disc = b * b - 4 * a * cc;
        if (disc < 0) {
            report.complex_pair = true;
        } else {
            auto root = QuadSurd::sqrt(QuadSurd(disc));
            QuadSurd lo = (QuadSurd(-b) - *root) / QuadSurd(2 * a);
            QuadSurd hi = (QuadSurd(-b) + *root) / QuadSurd(2 * a);
            if (hi < lo) std::swap(lo, hi);
            report.surd_roots = {lo, hi};
        }
    }
    std::sort(report.rational_roots.begin(), report.rational_roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return report;
}

Rat discriminant(const RatPolynomial& p) {
    if (p.degree() == 2) {
        Rat a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        return b * b - 4 * a * c;
    }
    if (p.degree() == 3) {
        Rat a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
        return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
    }
    throw std::invalid_argument("discriminant defined here for degrees 2 and 3 only");
}

RatPolynomial nu_translate_poly(const Sequence& s) {
    auto vals = rational_values(s, "translation polynomial");
    auto [s1, s2, s3] = power_sums(vals);
    Rat n(static_cast<long>(vals.size()));
    return RatPolynomial({s1 * s1 - s3, 2 * n * s1 - 3 * s2, n * n - 3 * s1, -n}, "t");
}

RatPolynomial nu_subset_translate_poly(const Sequence& s, const Selector& sel) {
    auto vals = rational_values(s, "translation polynomial");
    auto [s1, s2, s3] = power_sums(vals);
    PowerSums v{0, 0, 0};
    for (auto i : sel.resolve(s)) {
        const Rat& a = vals[i];
        v.s1 += a;
        v.s2 += a * a;
        v.s3 += a * a * a;
    }
    Rat k(static_cast<long>(sel.resolve(s).size()));
    return RatPolynomial({s1 * s1 - s3, 2 * s1 * k - 3 * v.s2, k * k - 3 * v.s1, -k}, "t");
}

RatPolynomial nu_scale_subset_poly(const Sequence& s, const Selector& sel) {
    auto vals = rational_values(s, "scaling polynomial");
    auto picked = sel.resolve(s);
    std::vector<bool> in_v(vals.size(), false);
    for (auto i : picked) in_v[i] = true;
    Rat su = 0, cu = 0, sv = 0, cv = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const Rat& a = vals[i];
        if (in_v[i]) {
            sv += a;
            cv += a * a * a;
        } else {
            su += a;
            cu += a * a * a;
        }
    }
    return RatPolynomial({su * su - cu, 2 * su * sv, sv * sv, -cv}, "x");
}

RatPolynomial nu_adjoin_one_poly(const Sequence& s) {
    auto vals = rational_values(s, "adjoin polynomial");
    auto [s1, s2, s3] = power_sums(vals);
    (void)s2;
    return RatPolynomial({s1 * s1 - s3, 2 * s1, 1, -1}, "x");
}

std::vector<Rat> series_expand(const RatPolynomial& num, const RatPolynomial& den, long order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    Rat b0 = den.coeff(0);
    if (b0 == 0) throw std::invalid_argument("series expansion needs den(0) != 0");
    std::vector<Rat> out(order + 1);
    for (long k = 0; k <= order; ++k) {
        Rat acc = num.coeff(k);
        for (long i = 1; i <= k; ++i) acc -= den.coeff(i) * out[k - i];
        out[k] = acc / b0;
    }
    return out;
}

}  // namespace nico
