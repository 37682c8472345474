#include "doctest.h"

#include "nico/surd.hpp"

using nico::Int;
using nico::QuadSurd;
using nico::Rat;

TEST_CASE("rational values reduce and print") {
    QuadSurd a(Rat(6, 4));
    CHECK(a.is_rational());
    CHECK_FALSE(a.is_integer());
    CHECK(a.str() == "3/2");
    CHECK(QuadSurd(-7L).str() == "-7");
    CHECK(QuadSurd(Int(0)).is_zero());
}

TEST_CASE("surds normalize to a squarefree radicand") {
    QuadSurd s(Int(1), Int(2), Int(12), Int(2));  // (1 + 2*sqrt(12))/2
    CHECK(s.d() == 3);
    CHECK(s.str() == "(1+4*sqrt(3))/2");

    QuadSurd collapses(Int(0), Int(3), Int(4), Int(2));  // 3*sqrt(4)/2 = 3
    CHECK(collapses.is_integer());
    CHECK(collapses.rational() == 3);
}

TEST_CASE("golden ratio arithmetic") {
    QuadSurd phi(Int(1), Int(1), Int(5), Int(2));
    CHECK(phi * phi == phi + QuadSurd(1L));
    CHECK((phi * phi).str() == "(3+1*sqrt(5))/2");
    CHECK(phi.conjugate() * phi == QuadSurd(-1L));
    CHECK(phi.norm() == Rat(-1));
    CHECK((QuadSurd(1L) / phi) == phi - QuadSurd(1L));
}

TEST_CASE("mixed-field arithmetic stays closed when one side is rational") {
    QuadSurd r(Rat(2, 3));
    QuadSurd s(Int(1), Int(1), Int(7), Int(1));
    QuadSurd sum = r + s;
    CHECK(sum.d() == 7);
    CHECK(sum - s == r);
    CHECK_THROWS(s + QuadSurd(Int(0), Int(1), Int(3), Int(1)));
}

TEST_CASE("ordering agrees with real values") {
    QuadSurd sqrt2(Int(0), Int(1), Int(2), Int(1));
    CHECK(QuadSurd(1L) < sqrt2);
    CHECK(sqrt2 < QuadSurd(Rat(3, 2)));
    CHECK(QuadSurd(Rat(7, 5)) < sqrt2);
    QuadSurd neg = -sqrt2;
    CHECK(neg < QuadSurd(-1L));
    CHECK(neg.sign() == -1);
}

TEST_CASE("square roots") {
    auto r = QuadSurd::sqrt(QuadSurd(Rat(49, 4)));
    REQUIRE(r.has_value());
    CHECK(r->rational() == Rat(7, 2));

    auto s = QuadSurd::sqrt(QuadSurd(45L));
    REQUIRE(s.has_value());
    CHECK(s->str() == "(0+3*sqrt(5))/1");

    // (1 + sqrt(2))^2 = 3 + 2*sqrt(2)
    auto nested = QuadSurd::sqrt(QuadSurd(Int(3), Int(2), Int(2), Int(1)));
    REQUIRE(nested.has_value());
    CHECK(*nested == QuadSurd(Int(1), Int(1), Int(2), Int(1)));

    CHECK_FALSE(QuadSurd::sqrt(QuadSurd(-4L)).has_value());
    CHECK_FALSE(QuadSurd::sqrt(QuadSurd(Int(1), Int(1), Int(5), Int(2))).has_value());
}

TEST_CASE("exact_sqrt and is_perfect_square") {
    CHECK(nico::exact_sqrt(Rat(9, 16)) == Rat(3, 4));
    CHECK_FALSE(nico::exact_sqrt(Rat(2)).has_value());
    CHECK_FALSE(nico::exact_sqrt(Rat(-9)).has_value());
    CHECK(nico::is_perfect_square(Rat(225)));
    CHECK_FALSE(nico::is_perfect_square(Rat(226)));
}

TEST_CASE("make assembles a value from rational parts") {
    QuadSurd v = QuadSurd::make(Rat(1, 2), Rat(-3, 4), Int(6));
    CHECK(v.str() == "(2-3*sqrt(6))/4");
    CHECK(QuadSurd::make(Rat(5), Rat(0), Int(7)).is_rational());
}
