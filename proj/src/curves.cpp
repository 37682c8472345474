#include "nico/curves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nico/poly.hpp"

namespace nico {

namespace {

Rat rat_pow(const Rat& x, long k) {
    Rat acc(1);
    for (long i = 0; i < k; ++i) acc *= x;
    return acc;
}

void require_n(long n) {
    if (n < 3) throw std::invalid_argument("w_n needs n >= 3");
}

// Constant term and linear coefficient of nu(w_n; a, b): nu0 + 2c(a+b) + ...
struct WConstants {
    Rat nu0;
    Rat c;
};

WConstants w_constants(long n) {
    require_n(n);
    Int nu0 = w_nu(n);
    Int c = Int(n) * (n + 1) / 2 + 2;
    return {Rat(nu0), Rat(c)};
}

// nu(w_n; a, b) restricted to a fixed rational a, as a cubic in b.
RatPolynomial b_slice(const WConstants& w, const Rat& a) {
    Rat c0 = w.nu0 + 2 * w.c * a + a * a - a * a * a;
    Rat c1 = 2 * w.c + 2 * a;
    return RatPolynomial({c0, c1, Rat(1), Rat(-1)}, "b");
}

std::string component_tag(long n, const Rat& a, const Rat& b) {
    Rat lo(-(n + 4)), hi(2);
    bool inside = a >= lo && a <= hi && b >= lo && b <= hi;
    return inside ? "oval" : "branch";
}

}  // namespace

BiPoly BiPoly::term(long i, long j, const Rat& v) {
    BiPoly p;
    p.add_term(i, j, v);
    return p;
}

void BiPoly::add_term(long i, long j, const Rat& v) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (v != 0) terms_.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second == 0) terms_.erase(it);
}

Rat BiPoly::coeff(long i, long j) const {
    auto it = terms_.find(std::make_pair(i, j));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat BiPoly::eval(const Rat& a, const Rat& b) const {
    Rat acc(0);
    for (const auto& [key, v] : terms_) acc += v * rat_pow(a, key.first) * rat_pow(b, key.second);
    return acc;
}

QuadSurd BiPoly::eval(const QuadSurd& a, const QuadSurd& b) const {
    QuadSurd acc(0L);
    for (const auto& [key, v] : terms_) {
        QuadSurd t((Rat(v)));
        for (long i = 0; i < key.first; ++i) t = t * a;
        for (long j = 0; j < key.second; ++j) t = t * b;
        acc = acc + t;
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [key, v] : o.terms_) add_term(key.first, key.second, v);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [key, v] : o.terms_) {
        Rat neg = -v;
        add_term(key.first, key.second, neg);
    }
    return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly out;
    for (const auto& [ka, va] : x.terms_)
        for (const auto& [kb, vb] : y.terms_) {
            Rat prod = va * vb;
            out.add_term(ka.first + kb.first, ka.second + kb.second, prod);
        }
    return out;
}

BiPoly operator*(const Rat& c, const BiPoly& p) {
    BiPoly out;
    for (const auto& [key, v] : p.terms_) {
        Rat prod = c * v;
        out.add_term(key.first, key.second, prod);
    }
    return out;
}

BiPoly BiPoly::partial_a() const {
    BiPoly out;
    for (const auto& [key, v] : terms_)
        if (key.first > 0) {
            Rat scaled = v * key.first;
            out.add_term(key.first - 1, key.second, scaled);
        }
    return out;
}

BiPoly BiPoly::partial_b() const {
    BiPoly out;
    for (const auto& [key, v] : terms_)
        if (key.second > 0) {
            Rat scaled = v * key.second;
            out.add_term(key.first, key.second - 1, scaled);
        }
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::pair<long, long>, Rat>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        long dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, v] : ordered) {
        bool neg = v < 0;
        Rat mag = neg ? Rat(-v) : v;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        auto append = [&mono](const char* name, long e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        append("a", key.first);
        append("b", key.second);
        if (mono.empty())
            out << mag.get_str();
        else if (mag == 1)
            out << mono;
        else
            out << mag.get_str() << '*' << mono;
    }
    return out.str();
}

BiPoly adjoin_cubic(const Sequence& s) {
    QuadSurd nv = nu(s);
    QuadSurd sv = sum(s);
    if (!nv.is_rational() || !sv.is_rational())
        throw std::invalid_argument("adjoin surface needs a rational base sequence");
    Rat nu0 = nv.rational();
    Rat twoc = 2 * sv.rational();
    BiPoly f;
    f.add_term(0, 0, nu0);
    f.add_term(1, 0, twoc);
    f.add_term(0, 1, twoc);
    f.add_term(2, 0, Rat(1));
    f.add_term(0, 2, Rat(1));
    f.add_term(1, 1, Rat(2));
    f.add_term(3, 0, Rat(-1));
    f.add_term(0, 3, Rat(-1));
    return f;
}

QuadSurd adjoin_two_eval(const Sequence& s, const QuadSurd& a, const QuadSurd& b) {
    return nu(adjoin(s, {a, b}));
}

BiPoly quadratic_factor(const Sequence& s) {
    if (!nu(s).is_zero()) throw std::domain_error("quadratic factor requires nu = 0");
    QuadSurd sv = sum(s);
    if (!sv.is_rational()) throw std::invalid_argument("quadratic factor needs a rational sum");
    BiPoly q;
    q.add_term(2, 0, Rat(1));
    q.add_term(0, 2, Rat(1));
    q.add_term(1, 1, Rat(-1));
    q.add_term(1, 0, Rat(-1));
    q.add_term(0, 1, Rat(-1));
    Rat c0 = -2 * sv.rational();
    q.add_term(0, 0, c0);
    return q;
}

bool factorization_check(const Sequence& s) {
    BiPoly line;
    line.add_term(1, 0, Rat(1));
    line.add_term(0, 1, Rat(1));
    return adjoin_cubic(s) == Rat(-1) * (line * quadratic_factor(s));
}

QuadSurd ellipse_eccentricity(const BiPoly& q) {
    BiPoly shape = q;
    Rat c0 = q.coeff(0, 0);
    shape.add_term(0, 0, -c0);
    BiPoly expected;
    expected.add_term(2, 0, Rat(1));
    expected.add_term(0, 2, Rat(1));
    expected.add_term(1, 1, Rat(-1));
    expected.add_term(1, 0, Rat(-1));
    expected.add_term(0, 1, Rat(-1));
    if (shape != expected)
        throw std::invalid_argument("not a quadratic-factor conic");
    // c0 = -2c; the form a^2 - ab + b^2 - a - b has minimum -1 at (1,1),
    // so the level set 2c is real and nondegenerate only for c > -1/2.
    Rat c = -c0 / 2;
    if (c <= Rat(-1, 2)) throw std::domain_error("conic is a single point or empty");
    return QuadSurd(Int(0), Int(1), Int(6), Int(3));
}

Sequence sigma_one() {
    std::vector<QuadSurd> elems;
    for (long v : {1, 2, 3, 3, 3, 5, 5, 6, 7, 9, 10, 12}) elems.emplace_back(v);
    return Sequence(std::move(elems));
}

Sequence sigma_two() { return Sequence::range(1, 11); }

ProductFamilyReport same_quadratic_products(long n) {
    if (n < 1) throw std::invalid_argument("product family needs n >= 1");
    Sequence s1 = sigma_one(), s2 = sigma_two();
    std::vector<Sequence> products;
    for (long i = 0; i <= n; ++i) {
        Sequence p = i > 0 ? bag_power(s1, i) : Sequence{};
        for (long j = 0; j < n - i; ++j) p = p.empty() ? s2 : bag_product(p, s2);
        if (p.empty()) p = bag_power(s1, n);  // unreachable: i=0 forces j>0
        products.push_back(std::move(p));
    }

    ProductFamilyReport report;
    report.n = n;
    report.count = static_cast<long>(products.size());

    report.distinct = true;
    for (std::size_t i = 0; i < products.size(); ++i)
        for (std::size_t j = i + 1; j < products.size(); ++j)
            if (products[i] == products[j]) report.distinct = false;

    Int target = 66;
    mpz_pow_ui(target.get_mpz_t(), target.get_mpz_t(), static_cast<unsigned long>(n));
    QuadSurd target_sum((Int(target)));

    report.all_nu_zero = true;
    report.sums_match = true;
    for (const auto& p : products) {
        if (!nu(p).is_zero()) report.all_nu_zero = false;
        if (sum(p) != target_sum) report.sums_match = false;
    }

    report.same_factor = report.all_nu_zero;
    if (report.all_nu_zero) {
        BiPoly q0 = quadratic_factor(products.front());
        for (const auto& p : products)
            if (quadratic_factor(p) != q0) report.same_factor = false;
    }

    report.pass = report.distinct && report.all_nu_zero && report.sums_match && report.same_factor;
    return report;
}

Sequence w_sequence(long n) {
    require_n(n);
    return adjoin(Sequence::range(1, n), {QuadSurd(2L)});
}

Int w_nu(long n) {
    require_n(n);
    Int m(n);
    Int v = 2 * (m * m + m - 2);
    return v;
}

bool weierstrass_check(long n) {
    WConstants w = w_constants(n);
    BiPoly f = adjoin_cubic(w_sequence(n));
    Rat n2(n + 2);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            Rat ar(a), br(b);
            Rat u = (ar + br - n2) / 2;
            Rat y = (ar * ar - br * br) / 4;
            Rat pn = 3 * n2 * n2 * n2 + 2 * (Rat(n) * n + 20) * u - 4 * (3 * Rat(n) + 2) * u * u -
                     8 * u * u * u;
            Rat lhs = -3 * y * y + Rat(1, 16) * (2 * u + n2) * pn;
            Rat rhs = (ar + br) / 4 * f.eval(ar, br);
            if (lhs != rhs) return false;
        }
    return true;
}

std::vector<IntegerPoint> integer_points(long n, long box) {
    require_n(n);
    if (box < 0) throw std::invalid_argument("box must be nonnegative");
    Int nu0 = w_nu(n);
    Int c = Int(n) * (n + 1) / 2 + 2;
    std::vector<IntegerPoint> points;
    for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b) {
            Int ia(a), ib(b), s(a + b);
            Int val = nu0 + 2 * c * s + s * s - ia * ia * ia - ib * ib * ib;
            if (val != 0) continue;
            points.push_back({a, b, component_tag(n, Rat(a), Rat(b))});
        }
    return points;
}

CurvePointSet curve_sample(long n, const Rat& a_lo, const Rat& a_hi, const Rat& step, long precision) {
    require_n(n);
    if (step <= 0) throw std::invalid_argument("step must be positive");
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    WConstants w = w_constants(n);

    Int scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision + 2));
    Rat width_eps(Int(1), scale);
    Rat residual_eps(Int(1), Int(100000000));

    CurvePointSet out;
    out.n = n;
    for (Rat a = a_lo; a <= a_hi; a += step) {
        RatPolynomial slice = b_slice(w, a);
        RootReport roots = rational_roots(slice);

        std::vector<std::pair<Rat, SampledPoint>> row;
        auto emit_exact = [&](const Rat& b) {
            SampledPoint pt;
            pt.a = a;
            pt.b = FixedDecimal::of(b, precision);
            pt.exact = true;
            pt.b_exact = b;
            pt.component = component_tag(n, a, b);
            row.emplace_back(b, std::move(pt));
        };
        auto emit_approx = [&](const Rat& b) {
            SampledPoint pt;
            pt.a = a;
            pt.b = FixedDecimal::of(b, precision);
            pt.component = component_tag(n, a, b);
            row.emplace_back(b, std::move(pt));
        };

        for (const auto& [root, mult] : roots.rational_roots) emit_exact(root);

        const RatPolynomial& rest = roots.residual;
        if (rest.degree() == 2 && !roots.complex_pair) {
            for (const auto& r : roots.surd_roots) {
                Rat approx = FixedDecimal::of(r, precision + 2).to_rat();
                emit_approx(approx);
            }
        } else if (rest.degree() == 3) {
            // No rational roots left, so every real root is simple and a
            // sign scan at quarter-integer steps brackets each of them.
            Rat bound(1);
            for (long k = 0; k < 3; ++k) {
                Rat q = rest.coeff(k) / rest.coeff(3);
                if (q < 0) q = -q;
                if (q + 1 > bound) bound = q + 1;
            }
            long reach = static_cast<long>(mpz_get_si(Int(Rat(4) * bound).get_mpz_t())) + 1;
            Rat prev_x(-reach, 4);
            Rat prev_v = rest.eval(prev_x);
            for (long k = -reach + 1; k <= reach; ++k) {
                Rat x(k, 4);
                Rat v = rest.eval(x);
                if (prev_v == 0) {
                    emit_exact(prev_x);  // unreachable: rational roots are stripped
                } else if (v != 0 && ((prev_v < 0) != (v < 0))) {
                    Rat lo = prev_x, hi = x, flo = prev_v;
                    Rat mid;
                    while (true) {
                        mid = (lo + hi) / 2;
                        Rat fm = rest.eval(mid);
                        if (fm == 0) break;
                        if ((fm < 0) == (flo < 0)) {
                            lo = mid;
                            flo = fm;
                        } else {
                            hi = mid;
                        }
                        Rat fmag = fm < 0 ? Rat(-fm) : fm;
                        if (hi - lo <= width_eps && fmag < residual_eps) break;
                    }
                    emit_approx(mid);
                }
                prev_x = x;
                prev_v = v;
            }
        } else if (rest.degree() == 1) {
            Rat r = -rest.coeff(0) / rest.coeff(1);
            emit_exact(r);  // unreachable: a linear residual root is rational
        }

        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [key, pt] : row) out.points.push_back(std::move(pt));
    }
    return out;
}

FixedDecimal oval_radius(long n, long dx, long dy, long precision) {
    require_n(n);
    if (dx == 0 && dy == 0) throw std::invalid_argument("direction must be nonzero");
    if (precision < 1) throw std::invalid_argument("precision must be positive");
    BiPoly f = adjoin_cubic(w_sequence(n));
    auto value = [&](const Rat& t) { return f.eval(Rat(-1) + t * dx, Rat(-1) + t * dy); };

    Int scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
    Rat eps(Int(1), scale);

    Rat lo(0);
    Rat flo = value(lo);  // -6 at the center
    for (long k = 1; k <= 1000; ++k) {
        Rat t(k, 4);
        Rat v = value(t);
        if (v == 0) return FixedDecimal::of(t, precision);
        if ((v < 0) == (flo < 0)) {
            lo = t;
            flo = v;
            continue;
        }
        Rat hi = t;
        while (hi - lo > eps) {
            Rat mid = (lo + hi) / 2;
            Rat fm = value(mid);
            if (fm == 0) return FixedDecimal::of(mid, precision);
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return FixedDecimal::of((lo + hi) / 2, precision);
    }
    throw std::logic_error("no sign change along the ray");
}

CurveGeometryReport tangency_and_asymptote_check(long n) {
    require_n(n);
    BiPoly f = adjoin_cubic(w_sequence(n));
    CurveGeometryReport report;
    report.n = n;

    report.center_value = f.eval(Rat(-1), Rat(-1)) == Rat(-6);
    report.base_points = f.eval(Rat(0), Rat(-2)) == 0 && f.eval(Rat(-2), Rat(0)) == 0;

    report.line_section = true;
    for (long a = -2; a <= 2; ++a) {
        Rat ar(a);
        if (f.eval(ar, Rat(-2) - ar) != 6 * ar * (ar + 2)) report.line_section = false;
    }

    Rat ga = f.partial_a().eval(Rat(-1), Rat(-1));
    Rat gb = f.partial_b().eval(Rat(-1), Rat(-1));
    report.center_gradient_diagonal = ga == gb && ga != 0;

    // nu(w_n; 100, -100) = nu(w_n) > 0 while the value at b = -99.9 is
    // already negative, so the branch crosses with 0 < a + b < 1/10.
    Rat at_diag = f.eval(Rat(100), Rat(-100));
    Rat past = f.eval(Rat(100), Rat(-999, 10));
    report.asymptote_window = at_diag > 0 && past < 0;

    report.pass = report.center_value && report.base_points && report.line_section &&
                  report.center_gradient_diagonal && report.asymptote_window;
    return report;
}

}  // namespace nico
