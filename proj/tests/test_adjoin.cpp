#include "doctest.h"

#include "nico/adjoin.hpp"

using nico::ChainState;
using nico::Int;
using nico::QuadSurd;
using nico::Rat;
using nico::Sequence;

TEST_CASE("plus chains append consecutive integers") {
    Sequence base = Sequence::range(1, 3);
    ChainState st = ChainState::start(base);
    CHECK(st.step_quadratic().str() == "-12 - x + x^2");

    auto br = nico::chain_extend(st);
    CHECK(br.plus_value == QuadSurd(4L));
    CHECK(br.minus_value == QuadSurd(-3L));
    CHECK(br.plus_value + br.minus_value == QuadSurd(1L));  // the quadratic is monic with trace 1

    ChainState chain = nico::run_chain(base, 6, true);
    REQUIRE(chain.adjoined.size() == 6);
    for (std::size_t j = 1; j < 6; ++j)
        CHECK(chain.adjoined[j] - chain.adjoined[j - 1] == QuadSurd(1L));
    for (std::size_t j = 1; j <= 6; ++j)
        CHECK(nico::nu(nico::chain_prefix(base, chain, j)).is_zero());
}

TEST_CASE("minus-first chains on an initial segment die") {
    CHECK_THROWS_AS(nico::run_chain(Sequence::range(1, 3), 6, false), std::domain_error);
}

TEST_CASE("chains leave the field when the discriminant is not a square there") {
    QuadSurd x(Int(-1), Int(1), Int(5), Int(4));
    Sequence base({QuadSurd(1L), QuadSurd(2L) * x, QuadSurd(3L)});
    CHECK_THROWS_AS(nico::run_chain(base, 1, true), std::domain_error);
}

TEST_CASE("relaxed two-element chains satisfy the sextic") {
    Sequence relaxed({QuadSurd(1L), QuadSurd(1L), QuadSurd(-1L), QuadSurd(2L), QuadSurd(3L)});
    CHECK(nico::nu(relaxed).is_zero());

    auto p = nico::p_sextic(1, 1);
    CHECK(p.coeff(6) == 1);
    CHECK(p.coeff(4) == Rat(-59, 4));
    CHECK(p.coeff(2) == Rat(883, 16));
    CHECK(p.coeff(0) == Rat(-3897, 64));
    CHECK(p.coeff(5) == 0);
    CHECK(p.coeff(3) == 0);
    // centered second adjoined value: x2 = 2, y = x2 - 1/2
    CHECK(p.eval(Rat(3, 2)) == 0);

    auto e = nico::chain_eliminant(1, 1);
    CHECK(e.degree() == 3);
    CHECK(e.eval(Rat(9, 4)) == 0);
    CHECK(e.coeff(2) == Rat(-59, 4));

    for (long h = 1; h <= 3; ++h)
        for (long m = 1; m <= 3; ++m) {
            CHECK(nico::chain_root_identity_check(h, m));
            CHECK(nico::p_sextic_swap_check(h, m));
        }
}

TEST_CASE("arithmetic progressions glued to a constant block") {
    // n copies of n joined with a, a+s, ..., a+(n-1)s
    auto ext = nico::ap_extension(6, 1);
    CHECK(ext.disc == Rat(289));  // 17^2

    auto a6 = nico::ap_integer_extension(6, 1);
    REQUIRE(a6.has_value());
    {
        std::vector<QuadSurd> elems;
        for (int i = 0; i < 6; ++i) elems.emplace_back(6L);
        for (int i = 0; i < 6; ++i) {
            Int v = *a6 + i;
            elems.emplace_back(v);
        }
        CHECK(nico::nu(Sequence(elems)).is_zero());
    }
    CHECK_FALSE(nico::ap_integer_extension(5, 1).has_value());
    CHECK_FALSE(nico::ap_integer_extension(7, 1).has_value());

    CHECK(nico::ap_integer_extension(3, 2) == Int(3));
    CHECK(nico::ap_integer_extension(8, 2) == Int(6));
    CHECK(nico::ap_integer_extension(21, 2) == Int(14));
    CHECK_FALSE(nico::ap_integer_extension(4, 2).has_value());
}

TEST_CASE("fibonacci numbers and the step-two criterion") {
    CHECK(nico::fibonacci(0) == 0);
    CHECK(nico::fibonacci(1) == 1);
    CHECK(nico::fibonacci(10) == 55);
    CHECK_THROWS_AS(nico::fibonacci(-1), std::invalid_argument);

    auto f3 = nico::fibonacci_extension(3);
    CHECK(f3.valid);
    CHECK(f3.a == 3);
    auto f8 = nico::fibonacci_extension(8);
    CHECK(f8.valid);
    CHECK(f8.a == 6);
    CHECK_FALSE(nico::fibonacci_extension(4).valid);
    CHECK_FALSE(nico::fibonacci_extension(5).valid);
}

TEST_CASE("fibonacci block towers stay on the identity") {
    auto blocks = nico::fibonacci_block_family(2, 1);
    REQUIRE(blocks.size() == 3);
    CHECK(nico::sum(blocks[0]) == QuadSurd(9L));    // {3, 3, 3}
    CHECK(nico::sum(blocks[1]) == QuadSurd(24L));   // + {3, 5, 7}
    CHECK(nico::sum(blocks[2]) == QuadSurd(48L));   // + {6, 8, 10}
    for (const auto& s : blocks) CHECK(nico::nu(s).is_zero());
}

TEST_CASE("omitting one element and adjoining a rational pair") {
    auto pair21 = nico::omit_adjoin(2, 1);
    CHECK(pair21.a + pair21.b == Rat(25, 7));
    CHECK(nico::nu(pair21.seq).is_zero());

    auto pair53 = nico::omit_adjoin(5, 3);
    CHECK(pair53.a + pair53.b == Rat(363, 49));
    CHECK(nico::nu(pair53.seq).is_zero());

    CHECK_THROWS_AS(nico::omit_adjoin(5, 6), std::invalid_argument);

    for (long n : {1L, 2L, 9L}) {
        Rat nn(n);
        Rat lhs = nico::omit_p(nn) - nico::omit_p(-(nn + 1));
        Rat cube = (1 + 2 * nn) * (1 + 2 * nn) * (1 + 2 * nn);
        CHECK(lhs == cube);
    }
}

TEST_CASE("the eleven-element family and its t-replacement") {
    for (long n : {2L, 3L, 10L, 41L}) CHECK(nico::eleven_family_check(n));

    auto p = nico::t_replacement_poly(5);
    CHECK(p == nico::t_replacement_target(5));
    CHECK(p.eval(Rat(7)) == 0);
    CHECK(p.eval(Rat(23, 5) - 7) == 0);
    CHECK(nico::t_replacement_functional_check(5));
    CHECK_THROWS_AS(nico::t_replacement_poly(1), std::invalid_argument);
}
