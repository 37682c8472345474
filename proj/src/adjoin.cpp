#include "nico/adjoin.hpp"

#include <stdexcept>
#include <utility>

namespace nico {

namespace {

Sequence one_and_copies(long h, long m) {
    std::vector<QuadSurd> v;
    v.reserve(m + 1);
    v.emplace_back(1);
    for (long i = 0; i < m; ++i) v.emplace_back(h);
    return Sequence(std::move(v));
}

std::vector<Rat> deflate_by_root(const RatPolynomial& p, const Rat& r) {
    const auto& c = p.coeffs();
    std::size_t n = c.size() - 1;
    std::vector<Rat> q(n);
    q[n - 1] = c[n];
    for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = c[k] + r * q[k];
    return q;
}

}  // namespace

ChainState ChainState::start(const Sequence& base) {
    QuadSurd s = sum(base);
    return ChainState{s, {}, s};
}

RatPolynomial ChainState::step_quadratic() const {
    if (!total.is_rational()) throw std::invalid_argument("step quadratic needs a rational running sum");
    return RatPolynomial({-2 * total.rational(), -1, 1}, "x");
}

ChainBranches chain_extend(const ChainState& state) {
    QuadSurd disc = QuadSurd(1) + QuadSurd(8) * state.total;
    if (disc.sign() < 0) throw std::domain_error("no real chain extension");
    auto root = QuadSurd::sqrt(disc);
    if (!root) throw std::domain_error("chain step leaves the working field");
    QuadSurd half(Rat(1, 2));
    ChainBranches b{(QuadSurd(1) + *root) * half, (QuadSurd(1) - *root) * half, state, state};
    b.plus.adjoined.push_back(b.plus_value);
    b.plus.total += b.plus_value;
    b.minus.adjoined.push_back(b.minus_value);
    b.minus.total += b.minus_value;
    return b;
}

ChainState run_chain(const Sequence& base, long steps, bool first_plus) {
    if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
    ChainState st = ChainState::start(base);
    for (long j = 1; j <= steps; ++j) {
        ChainBranches br = chain_extend(st);
        auto excluded = [&](const QuadSurd& v) {
            if (v.is_zero()) return true;
            return !st.adjoined.empty() && v == -st.adjoined.back();
        };
        bool take_plus = (j == 1) ? first_plus : true;
        if (excluded(take_plus ? br.plus_value : br.minus_value)) take_plus = !take_plus;
        if (excluded(take_plus ? br.plus_value : br.minus_value))
            throw std::domain_error("chain blocked: both branches excluded");
        st = take_plus ? std::move(br.plus) : std::move(br.minus);
    }
    return st;
}

Sequence chain_prefix(const Sequence& base, const ChainState& chain, std::size_t j) {
    if (j > chain.adjoined.size()) throw std::out_of_range("prefix longer than the chain");
    return adjoin(base, {chain.adjoined.begin(), chain.adjoined.begin() + j});
}

RatPolynomial p_sextic(long h, long m) {
    Rat hh(h), mm(m);
    Rat hm = hh * mm;
    Rat c0 = (-512 * hm * hm * hm - 1728 * hm * hm + 8 * hh * (64 * hh * hh - 243) * mm - 225) / 64;
    Rat c2 = (192 * hm * hm + 432 * hm + 259) / 16;
    Rat c4 = (-24 * hm - 35) / 4;
    return RatPolynomial({c0, 0, c2, 0, c4, 0, 1}, "x");
}

RatPolynomial chain_eliminant(long h, long m) {
    if (h < 1 || m < 1) throw std::invalid_argument("base parameters must be positive");
    Sequence base = one_and_copies(h, m);
    Rat c = sum(base).rational();
    Rat cc = cube_sum(base).rational();
    Rat k = c + Rat(1, 8);
    Rat e2 = -(6 * k + 2);
    Rat e1 = 12 * k * k + 1;
    Rat e0 = -8 * k * k * k + Rat(63, 8) + 8 * (cc - 1);
    return RatPolynomial({e0, e1, e2, 1}, "u");
}

bool chain_root_identity_check(long h, long m) {
    RatPolynomial e = chain_eliminant(h, m);
    RatPolynomial composed({e.coeff(0), 0, e.coeff(1), 0, e.coeff(2), 0, e.coeff(3)}, "x");
    RatPolynomial p = p_sextic(h, m);
    if (composed != p) return false;
    Sequence base = one_and_copies(h, m);
    Rat c = sum(base).rational();
    Rat cc = cube_sum(base).rational();
    // x2 = y + 1/2 and the eliminated x1 = x2(x2 - 1)/2 - c, as polynomials in y
    RatPolynomial x2({Rat(1, 2), 1}, "x");
    RatPolynomial x1({-Rat(1, 8) - c, 0, Rat(1, 2)}, "x");
    RatPolynomial total = RatPolynomial::constant(c, "x") + x1 + x2;
    RatPolynomial rebuilt =
        Rat(8) * (RatPolynomial::constant(cc, "x") + x1 * x1 * x1 + x2 * x2 * x2 - total * total);
    return rebuilt == p;
}

bool p_sextic_swap_check(long h, long m) {
    RatPolynomial diff = p_sextic(h, m) - p_sextic(m, h);
    Rat expected = 8 * Rat(h) * m * (h - m) * (Rat(h) + m);
    return diff == RatPolynomial::constant(expected, "x");
}

APExtension ap_extension(long n, long s) {
    if (n < 1) throw std::invalid_argument("block length must be positive");
    Rat nn(n), ss(s);
    Rat t = nn * (nn - 1) / 2;
    Rat u = (nn - 1) * nn * (2 * nn - 1) / 6;
    RatPolynomial total({nn * nn + ss * t, nn}, "a");
    RatPolynomial cubes({nn * nn * nn * nn + ss * ss * ss * t * t, 3 * ss * ss * u, 3 * ss * t, nn}, "a");
    APExtension out;
    out.nu_poly = total * total - cubes;
    out.linear_factor = RatPolynomial({ss * t, nn}, "a");
    Rat root = -ss * t / nn;
    if (out.nu_poly.eval(root) != 0) throw std::logic_error("forced linear factor does not divide");
    out.quadratic_factor = Rat(1, n) * RatPolynomial(deflate_by_root(out.nu_poly, root), "a");
    out.disc = discriminant(out.quadratic_factor);
    return out;
}

std::optional<Int> ap_integer_extension(long n, long s) {
    APExtension e = ap_extension(n, s);
    Rat a = e.quadratic_factor.coeff(2), b = e.quadratic_factor.coeff(1), c = e.quadratic_factor.coeff(0);
    Rat disc = b * b - 4 * a * c;
    if (disc < 0) return std::nullopt;
    auto sq = exact_sqrt(disc);
    if (!sq) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat root = (-b + sign * *sq) / (2 * a);
        if (root >= 1 && root.get_den() == 1) return Int(root.get_num());
    }
    return std::nullopt;
}

Int fibonacci(long k) {
    if (k < 0) throw std::invalid_argument("negative Fibonacci index");
    Int f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

FibonacciExtension fibonacci_extension(long n) {
    if (n < 1) throw std::invalid_argument("extension needs n >= 1");
    Int disc = 5 * Int(n) * n + 4;
    if (!mpz_perfect_square_p(disc.get_mpz_t())) return FibonacciExtension{};
    Int s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    return FibonacciExtension{true, (2 - n + s) / 2};
}

std::vector<Sequence> fibonacci_block_family(long n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("block family needs n >= 1, m >= 0");
    Int f2n = fibonacci(2 * n);
    Int start = fibonacci(2 * n - 1) + 1;
    long len = static_cast<long>(f2n.get_si());
    std::vector<QuadSurd> elems;
    for (long i = 0; i < len; ++i) elems.emplace_back(f2n);
    std::vector<Sequence> out;
    out.emplace_back(elems);
    for (long k = 0; k <= m; ++k) {
        for (long i = 0; i < len; ++i) {
            Int v = start + 2 * i + k * f2n;
            elems.emplace_back(v);
        }
        out.emplace_back(elems);
    }
    return out;
}

Rat omit_p(const Rat& n) { return (1 + n) * (1 + 2 * n + 5 * n * n + n * n * n); }

Rat omit_q(const Rat& n) { return (1 + 2 * n) * (1 + n + n * n); }

RationalAdjoinPair omit_adjoin(long n, long m) {
    if (n < 2 || m < 1 || m > n) throw std::invalid_argument("omit parameters out of range");
    Rat nn(n), mm(m);
    RationalAdjoinPair out;
    out.n = n;
    out.m = m;
    if (m == 1) {
        out.a = -omit_p(-(nn + 1)) / omit_q(nn);
        out.b = omit_p(nn) / omit_q(nn);
    } else {
        Rat denom = (2 * nn + 1) * (1 - 3 * mm + 3 * mm * mm + nn + nn * nn);
        Rat big_a = 3 * mm * mm * mm + (-1 + 3 * mm + 3 * mm * mm) * nn + (3 * mm - 1) * nn * nn - nn * nn * nn;
        Rat big_b = 1 - 3 * mm * mm + 3 * mm * mm * mm + (2 + 3 * mm - 3 * mm * mm) * nn +
                    (3 * mm + 2) * nn * nn + nn * nn * nn;
        out.a = (nn - (mm - 1)) * big_a / denom;
        out.b = (nn + mm) * big_b / denom;
    }
    out.seq = adjoin(remove_one(Sequence::range(1, n), QuadSurd(m)), {QuadSurd(out.a), QuadSurd(out.b)});
    return out;
}

namespace {

/// nu of {1..k} with {u, v} adjoined, by closed form.
Int two_adjoin_nu(const Int& k, const Int& u, const Int& v) {
    Int tri = k * (k + 1) / 2;
    Int s = tri + u + v;
    Int c = tri * tri + u * u * u + v * v * v;
    return s * s - c;
}

}  // namespace

bool eleven_family_check(long n) {
    if (n < 2) throw std::invalid_argument("family index must be at least 2");
    Int nn(n);
    const struct {
        Int k, u, v, v_repl;
    } ids[] = {
        {7 * nn - 12, 8 * nn - 12, 3 * nn - 3, 5 * nn - 8},
        {7 * nn - 10, 8 * nn - 10, 3 * nn - 4, 5 * nn - 5},
        {13 * nn + 35, 15 * nn + 42, 7 * nn + 21, 8 * nn + 22},
        {13 * nn + 42, 15 * nn + 50, 7 * nn + 23, 8 * nn + 28},
    };
    for (const auto& id : ids) {
        if (two_adjoin_nu(id.k, id.u, id.v) != 0) return false;
        if (two_adjoin_nu(id.k, id.u, id.v_repl) != 0) return false;
    }
    return true;
}

namespace {

/// The two sides of the base identity with 7n replaced by tn, in t.
std::pair<RatPolynomial, RatPolynomial> replacement_sides(long n) {
    Rat u = 8 * Rat(n) - 12, v = 3 * Rat(n) - 3;
    RatPolynomial k({-12, Rat(n)}, "t");
    RatPolynomial tri = Rat(1, 2) * (k * (k + RatPolynomial::constant(1, "t")));
    RatPolynomial cubes = tri * tri + RatPolynomial::constant(u * u * u + v * v * v, "t");
    RatPolynomial sq = tri + RatPolynomial::constant(u + v, "t");
    return {cubes, sq * sq};
}

}  // namespace

RatPolynomial t_replacement_poly(long n) {
    if (n < 2) throw std::invalid_argument("family index must be at least 2");
    auto [cubes, square] = replacement_sides(n);
    return square - cubes;
}

RatPolynomial t_replacement_target(long n) {
    if (n < 2) throw std::invalid_argument("family index must be at least 2");
    Rat nn(n);
    RatPolynomial lin1({-7, 1}, "t");
    RatPolynomial lin2({7 * nn - 23, nn}, "t");
    return (nn * (11 * nn - 15)) * (lin1 * lin2);
}

bool t_replacement_functional_check(long n) {
    if (n < 2) throw std::invalid_argument("family index must be at least 2");
    auto [cubes, square] = replacement_sides(n);
    Rat mirrored = Rat(23, n) - 7;
    return cubes.eval(Rat(7)) == cubes.eval(mirrored) && square.eval(Rat(7)) == square.eval(mirrored);
}

}  // namespace nico
