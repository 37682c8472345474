#include "doctest.h"

#include "nico/curves.hpp"
#include "nico/sequence.hpp"

using nico::BiPoly;
using nico::Int;
using nico::QuadSurd;
using nico::Rat;
using nico::Sequence;

TEST_CASE("two-variable polynomial algebra") {
    BiPoly a = BiPoly::term(1, 0, Rat(1));
    BiPoly b = BiPoly::term(0, 1, Rat(1));
    BiPoly square = (a + b) * (a + b);
    CHECK(square.coeff(2, 0) == 1);
    CHECK(square.coeff(1, 1) == 2);
    CHECK(square.str() == "a^2 + 2*a*b + b^2");
    CHECK(square.partial_a() == BiPoly::term(1, 0, Rat(2)) + BiPoly::term(0, 1, Rat(2)));
    CHECK(square.eval(Rat(2), Rat(3)) == Rat(25));
    CHECK((square - square).is_zero());
    CHECK_THROWS_AS(BiPoly::term(-1, 0, Rat(1)), std::invalid_argument);
}

TEST_CASE("the cubic matches direct evaluation") {
    Sequence s = nico::w_sequence(8);
    BiPoly f = nico::adjoin_cubic(s);
    for (long a = -3; a <= 3; a += 3)
        for (long b = -2; b <= 2; b += 2) {
            QuadSurd direct = nico::adjoin_two_eval(s, QuadSurd(a), QuadSurd(b));
            CHECK(f.eval(Rat(a), Rat(b)) == direct.rational());
        }
    CHECK(f.eval(Rat(0), Rat(0)) == Rat(140));  // nu(w_8)
    CHECK(f.eval(Rat(-1), Rat(-1)) == Rat(-6));
}

TEST_CASE("w_n bookkeeping") {
    CHECK(nico::w_sequence(8).size() == 9);
    CHECK(nico::w_nu(8) == 140);
    for (long n = 3; n <= 12; ++n) {
        Int direct = nico::nu(nico::w_sequence(n)).rational().get_num();
        CHECK(direct == nico::w_nu(n));
    }
    CHECK_THROWS_AS(nico::w_sequence(2), std::invalid_argument);
}

TEST_CASE("zero-nu bases split off the symmetric quadratic") {
    Sequence s1 = nico::sigma_one();
    Sequence s2 = nico::sigma_two();
    CHECK(s1.size() == 12);
    CHECK(s2.size() == 11);
    CHECK(nico::sum(s1) == QuadSurd(66L));
    CHECK(nico::sum(s2) == QuadSurd(66L));
    CHECK(nico::nu(s1).is_zero());
    CHECK(nico::nu(s2).is_zero());

    CHECK(nico::factorization_check(s1));
    CHECK(nico::factorization_check(s2));
    CHECK(nico::factorization_check(Sequence::range(1, 9)));

    // the factor only exists on nu = 0 bases
    CHECK_THROWS_AS(nico::quadratic_factor(nico::w_sequence(8)), std::domain_error);
}

TEST_CASE("eccentricity of the elliptical factor") {
    QuadSurd want(Int(0), Int(1), Int(6), Int(3));  // sqrt(2/3)
    CHECK(nico::ellipse_eccentricity(nico::quadratic_factor(nico::sigma_one())) == want);
    Sequence prod = nico::bag_product(nico::sigma_one(), nico::sigma_two());
    CHECK(nico::ellipse_eccentricity(nico::quadratic_factor(prod)) == want);

    // a^2 - ab + b^2 - a - b + 2 has c = -1: no real section
    BiPoly degenerate = BiPoly::term(2, 0, Rat(1)) + BiPoly::term(0, 2, Rat(1)) +
                        BiPoly::term(1, 1, Rat(-1)) + BiPoly::term(1, 0, Rat(-1)) +
                        BiPoly::term(0, 1, Rat(-1)) + BiPoly::term(0, 0, Rat(2));
    CHECK_THROWS_AS(nico::ellipse_eccentricity(degenerate), std::domain_error);
    CHECK_THROWS_AS(nico::ellipse_eccentricity(BiPoly::term(3, 0, Rat(1))), std::invalid_argument);
}

TEST_CASE("product powers share one quadratic factor") {
    for (long n = 1; n <= 3; ++n) {
        auto rep = nico::same_quadratic_products(n);
        CHECK(rep.pass);
        CHECK(rep.count == n + 1);
        CHECK(rep.distinct);
        CHECK(rep.all_nu_zero);
        CHECK(rep.sums_match);
        CHECK(rep.same_factor);
    }
}

TEST_CASE("the symmetric change of variables") {
    for (long n = 3; n <= 12; ++n) CHECK(nico::weierstrass_check(n));
}

TEST_CASE("integer points in the standard box") {
    auto pts = nico::integer_points(8, 20);
    CHECK(pts.size() == 20);
    auto has = [&](long a, long b) {
        for (const auto& p : pts)
            if (p.a == a && p.b == b) return true;
        return false;
    };
    CHECK(has(9, 11));
    CHECK(has(0, 10));
    CHECK(has(-8, -6));
    for (const auto& p : pts) CHECK(has(p.b, p.a));  // swap closure

    for (const auto& p : pts) {
        bool inside = p.a >= -12 && p.a <= 2 && p.b >= -12 && p.b <= 2;
        CHECK(p.component == (inside ? "oval" : "branch"));
    }
}

TEST_CASE("sampling a slice recovers the exact roots") {
    auto set = nico::curve_sample(8, Rat(0), Rat(0), Rat(1), 20);
    REQUIRE(set.points.size() == 3);
    CHECK(set.points[0].exact);
    CHECK(set.points[0].b_exact == Rat(-7));
    CHECK(set.points[1].b_exact == Rat(-2));
    CHECK(set.points[2].b_exact == Rat(10));
    CHECK(set.points[0].component == "oval");
    CHECK(set.points[2].component == "branch");
}

TEST_CASE("successive ovals nest strictly") {
    for (auto [dx, dy] : std::vector<std::pair<long, long>>{{-1, 0}, {0, -1}, {-1, -1}, {-2, -1}, {-1, -2}}) {
        auto r7 = nico::oval_radius(7, dx, dy, 15);
        auto r8 = nico::oval_radius(8, dx, dy, 15);
        auto r9 = nico::oval_radius(9, dx, dy, 15);
        CHECK(r7 < r8);
        CHECK(r8 < r9);
    }
}

TEST_CASE("geometry at the marked points") {
    for (long n : {7L, 8L, 9L}) {
        auto rep = nico::tangency_and_asymptote_check(n);
        CHECK(rep.pass);
        CHECK(rep.center_value);
        CHECK(rep.base_points);
        CHECK(rep.line_section);
        CHECK(rep.center_gradient_diagonal);
        CHECK(rep.asymptote_window);
    }
}
