#include "doctest.h"

#include "nico/poly.hpp"
#include "nico/sequence.hpp"

using nico::Rat;
using nico::RatPolynomial;
using nico::Selector;
using nico::Sequence;

TEST_CASE("polynomial basics") {
    RatPolynomial p({Rat(-3), Rat(0), Rat(1)});  // t^2 - 3
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rat(2)) == Rat(1));
    CHECK(p.derivative().str() == "2*t");
    CHECK(p.str() == "-3 + t^2");
    CHECK(RatPolynomial(std::vector<Rat>{}).is_zero());
    CHECK(RatPolynomial({Rat(0), Rat(0)}).degree() == -1);
}

TEST_CASE("whole-sequence translation cubic") {
    // nu([1..n] + t) = -(n/2) t (2t + n + 1)(t + 1)
    for (long n : {1L, 4L, 25L}) {
        RatPolynomial p = nico::nu_translate_poly(Sequence::range(1, n));
        CHECK(p.coeff(0) == 0);
        CHECK(p.coeff(1) * 2 == Rat(-n * (n + 1)));
        CHECK(p.coeff(2) * 2 == Rat(-n * (n + 3)));
        CHECK(p.coeff(3) == Rat(-n));
        // evaluating at t recovers nu of the shifted sequence
        CHECK(p.eval(Rat(3)) == nico::nu(nico::translate(Sequence::range(1, n), nico::QuadSurd(3L))).rational());
    }
}

TEST_CASE("subset translation polynomials factor as recorded") {
    RatPolynomial p = nico::nu_subset_translate_poly(Sequence::range(1, 19), Selector::indices({6, 13}));
    auto rep = nico::rational_roots(p);
    REQUIRE(rep.rational_roots.size() == 3);  // -t (t + 29)(2t - 5)
    CHECK(rep.rational_roots[0].first == Rat(-29));
    CHECK(rep.rational_roots[1].first == Rat(0));
    CHECK(rep.rational_roots[2].first == Rat(5, 2));

    RatPolynomial q = nico::nu_subset_translate_poly(Sequence::range(1, 23), Selector::mod(3, 1));
    auto qrep = nico::rational_roots(q);  // -4t (t + 27)(2t - 1)
    REQUIRE(qrep.rational_roots.size() == 3);
    CHECK(qrep.rational_roots[0].first == Rat(-27));
    CHECK(qrep.rational_roots[2].first == Rat(1, 2));
    CHECK(q.eval(Rat(1, 2)) == 0);
}

TEST_CASE("subset scaling polynomial carries a golden root pair") {
    RatPolynomial p = nico::nu_scale_subset_poly(Sequence::range(1, 6), Selector::indices({2, 4, 6}));
    CHECK(p.var() == "x");
    CHECK(p.eval(Rat(1, 2)) == Rat(36));
    auto rep = nico::rational_roots(p);  // -72 (x - 1)(4x^2 + 2x - 1)
    REQUIRE(rep.rational_roots.size() == 1);
    CHECK(rep.rational_roots[0].first == Rat(1));
    REQUIRE(rep.surd_roots.size() == 2);
    CHECK(rep.surd_roots[1] == nico::QuadSurd(nico::Int(-1), nico::Int(1), nico::Int(5), nico::Int(4)));
}

TEST_CASE("adjoining one element") {
    RatPolynomial p = nico::nu_adjoin_one_poly(Sequence::range(1, 5));  // 30x + x^2 - x^3
    auto rep = nico::rational_roots(p);
    REQUIRE(rep.rational_roots.size() == 3);
    CHECK(rep.rational_roots[0].first == Rat(-5));
    CHECK(rep.rational_roots[1].first == Rat(0));
    CHECK(rep.rational_roots[2].first == Rat(6));
}

TEST_CASE("root reports carry multiplicity, surds, and leftovers") {
    RatPolynomial p({Rat(-3), Rat(-4), Rat(1), Rat(2)});  // (t + 1)^2 (2t - 3)
    auto rep = nico::rational_roots(p);
    REQUIRE(rep.rational_roots.size() == 2);
    CHECK(rep.rational_roots[0] == std::pair<Rat, long>(Rat(-1), 2L));
    CHECK(rep.rational_roots[1] == std::pair<Rat, long>(Rat(3, 2), 1L));
    CHECK(rep.residual.degree() == 0);

    auto gauss = nico::rational_roots(RatPolynomial({Rat(1), Rat(0), Rat(1)}));
    CHECK(gauss.complex_pair);
    CHECK(gauss.surd_roots.empty());

    auto cubic = nico::rational_roots(RatPolynomial({Rat(-2), Rat(0), Rat(0), Rat(1)}));
    CHECK(cubic.rational_roots.empty());
    CHECK(cubic.residual.degree() == 3);
    CHECK_FALSE(cubic.complex_pair);

    CHECK_THROWS_AS(nico::rational_roots(RatPolynomial(std::vector<Rat>{})), std::invalid_argument);
}

TEST_CASE("discriminants") {
    CHECK(nico::discriminant(RatPolynomial({Rat(-1), Rat(-1), Rat(1)})) == Rat(5));
    // t^3 - 3t + 2 = (t - 1)^2 (t + 2) has a repeated root
    CHECK(nico::discriminant(RatPolynomial({Rat(2), Rat(-3), Rat(0), Rat(1)})) == Rat(0));
    CHECK_THROWS_AS(nico::discriminant(RatPolynomial({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})),
                    std::invalid_argument);
}

TEST_CASE("rational function series expansion") {
    auto geo = nico::series_expand(RatPolynomial({Rat(1)}), RatPolynomial({Rat(1), Rat(-1)}), 4);
    CHECK(geo == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});

    // Fibonacci numerators: x / (1 - x - x^2)
    auto fib = nico::series_expand(RatPolynomial({Rat(0), Rat(1)}),
                                   RatPolynomial({Rat(1), Rat(-1), Rat(-1)}), 6);
    CHECK(fib == std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(2), Rat(3), Rat(5), Rat(8)});

    CHECK_THROWS_AS(nico::series_expand(RatPolynomial({Rat(1)}), RatPolynomial({Rat(0), Rat(1)}), 3),
                    std::invalid_argument);
}
