#include "nico/pell.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nico {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

CFExpansion sqrt_continued_fraction(const Int& d) {
    if (d <= 0) throw std::invalid_argument("continued fraction needs d > 0");
    Int a0 = isqrt(d);
    if (a0 * a0 == d) throw std::invalid_argument("d is a perfect square");
    CFExpansion cf{a0, {}};
    Int m = 0, den = 1, a = a0;
    while (true) {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        cf.period.push_back(a);
        if (a == 2 * a0) break;
    }
    return cf;
}

PellSolution pell_fundamental(const Int& d) {
    CFExpansion cf = sqrt_continued_fraction(d);
    // Convergents of the periodic expansion until x^2 - d y^2 = 1.
    Int p_prev = 1, q_prev = 0;
    Int p = cf.a0, q = 1;
    std::size_t i = 0;
    while (p * p - d * q * q != 1) {
        const Int& a = cf.period[i % cf.period.size()];
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        ++i;
    }
    return PellSolution{p, q, d, 1};
}

std::vector<PellSolution> pell_solutions(const Int& d, long count) {
    if (count < 0) throw std::invalid_argument("solution count must be nonnegative");
    std::vector<PellSolution> out;
    if (count == 0) return out;
    PellSolution fund = pell_fundamental(d);
    out.push_back(fund);
    Int x = fund.x, y = fund.y;
    for (long k = 2; k <= count; ++k) {
        Int nx = fund.x * x + d * fund.y * y;
        Int ny = fund.x * y + fund.y * x;
        x = nx;
        y = ny;
        out.push_back(PellSolution{x, y, d, k});
    }
    return out;
}

Int repetition_nu(const Int& n, long u, const Int& t) {
    Int copies = u + 1;
    Int tri = n * (n + 1) / 2;
    Int sq = n * (n + 1) * (2 * n + 1) / 6;
    Int s = copies * (tri + n * t);
    Int c = copies * (tri * tri + 3 * t * sq + 3 * t * t * tri + n * t * t * t);
    return s * s - c;
}

std::vector<RepetitionEntry> repetition_family(long m, long count) {
    if (m < 2) throw std::invalid_argument("repetition factor must be at least 2");
    if (count < 0) throw std::invalid_argument("entry count must be nonnegative");
    Int d = Int(m) * m - 1;
    long u = m - 1;
    std::vector<RepetitionEntry> out;
    for (const auto& sol : pell_solutions(d, count)) {
        // sol.x^2 = d * sol.y^2 + 1 is the discriminant of
        // t^2 + (1 - u n) t - u n (n + 1) / 2 at n = sol.y.
        Int n = sol.y;
        Int base = u * n - 1;
        Int hi = base + sol.x, lo = base - sol.x;
        if (hi % 2 != 0 || lo % 2 != 0) throw std::logic_error("repetition offsets must be integral");
        out.push_back(RepetitionEntry{n, u, hi / 2, lo / 2});
    }
    return out;
}

std::vector<GapSolution> gap_family_solutions(long count) {
    if (count < 0) throw std::invalid_argument("solution count must be nonnegative");
    // x^2 - 8 y^2 = -7 splits into two orbits under the unit (3, 1);
    // x = 4j + 3 survivors give (j, r) = ((x - 3)/4, y).
    std::vector<GapSolution> all;
    for (auto [x, y] : {std::pair<Int, Int>{1, 1}, {5, 2}}) {
        long found = 0;
        while (found < count) {
            if (x % 4 == 3) {
                Int j = (x - 3) / 4;
                all.push_back(GapSolution{j, y, j + y});
                ++found;
            }
            Int nx = 3 * x + 8 * y;
            y = x + 3 * y;
            x = nx;
        }
    }
    std::sort(all.begin(), all.end(), [](const GapSolution& a, const GapSolution& b) { return a.j < b.j; });
    all.resize(count);
    return all;
}

RationalGF gap_j_generating_function() {
    RatPolynomial num({-2, -5, -19, 1, 1}, "x");
    RatPolynomial den({-1, 1, 34, -34, -1, 1}, "x");  // (x-1)(1-34x^2+x^4)
    return RationalGF{num, den};
}

RationalGF gap_m_generating_function() {
    RatPolynomial num({6, 12, 6}, "x");
    RatPolynomial den({1, -1, -34, 34, 1, -1}, "x");  // (1-x)(1-34x^2+x^4)
    return RationalGF{num, den};
}

std::vector<std::pair<Int, Int>> adjoin_form_solutions(long n) {
    if (n < 1) throw std::invalid_argument("base length must be positive");
    Int m = 4 * (Int(n) * n + n + 1);
    std::set<std::pair<Int, Int>> found;
    auto consider = [&](const Int& s, const Int& t) {
        if ((s + t) % 2 != 0) return;
        Int a = (s + t) / 2 + 1;
        Int b = (s - t) / 2 + 1;
        if (a < 1 || b < 1) return;
        if (a > b) std::swap(a, b);
        found.emplace(a, b);
    };
    for (Int t = 0; 3 * t * t <= m; ++t) {
        Int rem = m - 3 * t * t;
        Int s = isqrt(rem);
        if (s * s != rem) continue;
        for (const Int& ss : {s, Int(-s)}) {
            consider(ss, t);
            consider(ss, -t);
            if (s == 0) break;
        }
    }
    return {found.begin(), found.end()};
}

std::vector<std::pair<Int, Int>> adjoin_form_box_scan(long n, const Int& bound) {
    if (n < 1) throw std::invalid_argument("base length must be positive");
    Int tri = Int(n) * (n + 1) / 2;
    Int base_nu = tri * tri;  // sum^2 - cube_sum of {1..n} is 0; track parts
    std::vector<std::pair<Int, Int>> out;
    for (Int a = 1; a <= bound; ++a)
        for (Int b = a; b <= bound; ++b) {
            Int s = tri + a + b;
            Int c = base_nu + a * a * a + b * b * b;
            if (s * s == c) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

Int adjoin_form_default_bound(long n) { return Int(n) * n + n + 2; }

}  // namespace nico
