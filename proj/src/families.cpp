#include "nico/families.hpp"

#include <chrono>
#include <stdexcept>

#include "nico/adjoin.hpp"

namespace nico {

namespace {

constexpr long kOpen = std::numeric_limits<long>::max();

std::vector<QuadSurd> integer_elems(const std::vector<long>& vals) {
    std::vector<QuadSurd> e;
    e.reserve(vals.size());
    for (long v : vals) e.emplace_back(v);
    return e;
}

Sequence classical_seq(long n) { return Sequence::range(1, n); }

Sequence two_s_seq(long s) {
    if (s < 3) throw std::invalid_argument("two_s needs s >= 3");
    std::vector<long> vals{1, 2, 2, 3, 4, 5, 7};
    for (long v = 8; v <= 2 * s; v += 2) {
        vals.push_back(v);
        vals.push_back(v);
    }
    return Sequence(integer_elems(vals));
}

Sequence sigma_m_seq(long m) {
    if (m < 2) throw std::invalid_argument("sigma_m needs m >= 2");
    std::vector<long> vals{1, 2};
    for (long v = 2; v <= m; ++v) vals.push_back(v);
    vals.push_back(m + 2);
    return Sequence(integer_elems(vals));
}

Sequence eleven_seq(long n) {
    if (n < 2) throw std::invalid_argument("eleven needs n >= 2");
    return adjoin(Sequence::range(1, 7 * n - 12), {QuadSurd(8 * n - 12), QuadSurd(3 * n - 3)});
}

Sequence a_n_seq(long n) {
    if (n < 1) throw std::invalid_argument("a_n needs n >= 1");
    std::vector<long> vals;
    for (long v = 1; v <= 2 * n + 1; ++v) vals.push_back(v);
    for (long v = 2; v <= 2 * n; v += 2) vals.push_back(v);
    for (long v = 2 * n + 2; v <= 4 * n + 4; v += 2) vals.push_back(v);
    return Sequence(integer_elems(vals));
}

Sequence gap_12_seq() { return Sequence(integer_elems({6, 6, 7, 7, 8, 8, 8, 9, 9, 10, 10, 17})); }

Sequence gap_ratio_seq(long n) {
    if (n < 2) throw std::invalid_argument("gap_ratio needs n >= 2");
    std::vector<long> vals;
    for (long i = 0; i < n; ++i) vals.push_back(n);
    for (long i = 0; i < n * n - 2; ++i) vals.push_back(n * n);
    return Sequence(integer_elems(vals));
}

Sequence pell_gap_seq(long j, long m) {
    long r = m - j;
    if (j < 1 || r < 1 || (4 * j + 3) * (4 * j + 3) - 8 * r * r != -7)
        throw std::invalid_argument("pell_gap needs a gap-family pair (j, m)");
    std::vector<long> vals;
    for (long v = 1; v <= j + 1; ++v) vals.push_back(v);
    for (long i = 0; i < 2 * j; ++i) vals.push_back(m);
    return Sequence(integer_elems(vals));
}

Sequence power12_seq(long k) {
    if (k < 1) throw std::invalid_argument("power12 needs k >= 1");
    return bag_power(Sequence(integer_elems({1, 2})), k);
}

Sequence tau_power_seq(long k) {
    if (k < 0) throw std::invalid_argument("tau_power needs k >= 0");
    return bag_power(tau_sequence(), k + 1);
}

Sequence golden_seq(long k) {
    if (k < 1) throw std::invalid_argument("golden needs k >= 1");
    return bag_power(golden_base(), k);
}

Sequence fib_blocks_seq(long n, long j) {
    if (j < 0) throw std::invalid_argument("fib_blocks needs j >= 0");
    auto list = fibonacci_block_family(n, j == 0 ? 0 : j - 1);
    return list[j];
}

std::vector<std::vector<long>> grid_1d(long lo, long hi) {
    std::vector<std::vector<long>> g;
    for (long v = lo; v <= hi; ++v) g.push_back({v});
    return g;
}

std::vector<std::vector<long>> grid_2d(long alo, long ahi, long blo, long bhi) {
    std::vector<std::vector<long>> g;
    for (long a = alo; a <= ahi; ++a)
        for (long b = blo; b <= bhi; ++b) g.push_back({a, b});
    return g;
}

std::vector<FamilyDescriptor> build_registry() {
    std::vector<FamilyDescriptor> fams;
    auto zero = [](const std::vector<long>&) { return QuadSurd(0); };

    auto classical_grid = grid_1d(1, 40);
    classical_grid.push_back({500});
    fams.push_back({"classical",
                    {{"n", 1, kOpen}},
                    "first n integers",
                    [](const std::vector<long>& p) { return classical_seq(p[0]); },
                    zero,
                    classical_grid});

    fams.push_back({"repeated",
                    {{"u", 0, kOpen}, {"n", 1, kOpen}},
                    "u extra copies of {1..n}; nu = (n(n+1)/2)^2 u(u+1)",
                    [](const std::vector<long>& p) { return repeat_all(classical_seq(p[1]), p[0]); },
                    [](const std::vector<long>& p) {
                        Int t = Int(p[1]) * (p[1] + 1) / 2;
                        Int v = t * t * p[0] * (p[0] + 1);
                        return QuadSurd(v);
                    },
                    grid_2d(0, 4, 1, 8)});

    fams.push_back({"two_s",
                    {{"s", 3, kOpen}},
                    "{1,2,2,3,4,5,7} then even values 8..2s twice each",
                    [](const std::vector<long>& p) { return two_s_seq(p[0]); },
                    zero,
                    grid_1d(3, 12)});

    fams.push_back({"sigma_m",
                    {{"m", 2, kOpen}},
                    "{1,2,2,3,...,m,m+2}; shifting by 1 lands on nu = -18",
                    [](const std::vector<long>& p) { return sigma_m_seq(p[0]); },
                    zero,
                    grid_1d(2, 40)});

    fams.push_back({"eleven",
                    {{"n", 2, kOpen}},
                    "{1..7n-12} with {8n-12, 3n-3}; v-replacement variants kept in the adjoin checks",
                    [](const std::vector<long>& p) { return eleven_seq(p[0]); },
                    zero,
                    grid_1d(2, 20)});

    fams.push_back({"a_n",
                    {{"n", 1, kOpen}},
                    "{1..2n+1} plus evens 2..2n plus evens 2n+2..4n+4; nu = -8(n+1)^2(2n+3)",
                    [](const std::vector<long>& p) { return a_n_seq(p[0]); },
                    [](const std::vector<long>& p) {
                        Int v = Int(-8) * (p[0] + 1) * (p[0] + 1) * (2 * p[0] + 3);
                        return QuadSurd(v);
                    },
                    grid_1d(1, 10)});

    fams.push_back({"gap_12",
                    {},
                    "fixed twelve-element example with a long internal gap",
                    [](const std::vector<long>&) { return gap_12_seq(); },
                    zero,
                    {{}}});

    fams.push_back({"gap_ratio",
                    {{"n", 2, kOpen}},
                    "n copies of n with n^2-2 copies of n^2; gap ratio (n^2-n)/(n^2+n-2)",
                    [](const std::vector<long>& p) { return gap_ratio_seq(p[0]); },
                    zero,
                    grid_1d(2, 10)});

    fams.push_back({"pell_gap",
                    {{"j", 1, kOpen}, {"m", 2, kOpen}},
                    "{1..j+1} with m repeated 2j times; (j, m) from the gap Pell orbits",
                    [](const std::vector<long>& p) { return pell_gap_seq(p[0], p[1]); },
                    zero,
                    {{2, 6}, {7, 18}, {94, 228}}});

    fams.push_back({"power12",
                    {{"k", 1, kOpen}},
                    "k-fold product power of {1,2}; sorted tail is 2^(k-1), 2^k",
                    [](const std::vector<long>& p) { return power12_seq(p[0]); },
                    zero,
                    grid_1d(1, 8)});

    fams.push_back({"tau_power",
                    {{"k", 0, kOpen}},
                    "(k+1)-fold product power of the shifted {1..19}; holds an element with denominator 2^(k+1)",
                    [](const std::vector<long>& p) { return tau_power_seq(p[0]); },
                    zero,
                    grid_1d(0, 2)});

    fams.push_back({"golden",
                    {{"k", 1, kOpen}},
                    "k-fold product power of {1, 2x, 3, 4x, 5, 6x} over Q(sqrt(5))",
                    [](const std::vector<long>& p) { return golden_seq(p[0]); },
                    zero,
                    grid_1d(1, 3)});

    fams.push_back({"fib_blocks",
                    {{"n", 1, kOpen}, {"j", 0, kOpen}},
                    "F_2n copies of F_2n, then j shifted copies of the odd-step block",
                    [](const std::vector<long>& p) { return fib_blocks_seq(p[0], p[1]); },
                    zero,
                    grid_2d(1, 3, 0, 3)});

    std::vector<std::vector<long>> omit_grid;
    for (long n = 2; n <= 8; ++n)
        for (long m = 1; m <= n; ++m) omit_grid.push_back({n, m});
    fams.push_back({"omit_adjoin",
                    {{"n", 2, kOpen}, {"m", 1, kOpen}},
                    "{1..n} minus m with the closed-form rational pair adjoined",
                    [](const std::vector<long>& p) { return omit_adjoin(p[0], p[1]).seq; },
                    zero,
                    omit_grid});

    return fams;
}

}  // namespace

const std::vector<FamilyDescriptor>& registry() {
    static const std::vector<FamilyDescriptor> fams = build_registry();
    return fams;
}

const FamilyDescriptor& find_family(const std::string& name) {
    for (const auto& f : registry())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown family: " + name);
}

Sequence make_family_sequence(const std::string& name, const std::vector<long>& params) {
    const FamilyDescriptor& fam = find_family(name);
    if (params.size() != fam.params.size())
        throw std::invalid_argument(name + " expects " + std::to_string(fam.params.size()) + " parameter(s)");
    for (std::size_t i = 0; i < params.size(); ++i)
        if (params[i] < fam.params[i].lo || params[i] > fam.params[i].hi)
            throw std::invalid_argument(fam.params[i].name + " out of domain for " + name);
    return fam.generate(params);
}

FamilyReport verify_family(const std::string& name, const std::vector<long>& params) {
    const FamilyDescriptor& fam = find_family(name);
    auto t0 = std::chrono::steady_clock::now();
    Sequence seq = make_family_sequence(name, params);
    FamilyReport rep;
    rep.family = name;
    rep.params = params;
    rep.nu_value = nu(seq);
    rep.expected = fam.expected_nu(params);
    rep.pass = rep.nu_value == rep.expected;
    rep.size = seq.size();
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<FamilyReport> verify_all() {
    std::vector<FamilyReport> out;
    for (const auto& fam : registry())
        for (const auto& cell : fam.default_grid) out.push_back(verify_family(fam.name, cell));
    return out;
}

Sequence tau_sequence() {
    return translate_subset(Sequence::range(1, 19), Selector::indices({6, 13}), QuadSurd(Rat(5, 2)));
}

QuadSurd golden_x() { return QuadSurd(-1, 1, 5, 4); }

Sequence golden_base() { return scale_subset(Sequence::range(1, 6), Selector::indices({2, 4, 6}), golden_x()); }

}  // namespace nico
