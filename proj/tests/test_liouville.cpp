#include "doctest.h"

#include "nico/liouville.hpp"
#include "nico/sequence.hpp"

using nico::DivisorShape;
using nico::FixedDecimal;
using nico::Int;
using nico::QuadSurd;
using nico::Rat;

TEST_CASE("shape bookkeeping") {
    CHECK(nico::shape_size(DivisorShape{{2, 1}}) == 6);
    CHECK(nico::shape_size(DivisorShape{{}}) == 1);
    CHECK_THROWS_AS(nico::shape_size(DivisorShape{{-1}}), std::invalid_argument);
}

TEST_CASE("the quadratic cofactor of the translated divisor sequence") {
    // single prime squared: tau over divisors of p^0 is just {1}
    auto p0 = nico::f_r_poly(DivisorShape{{0}});
    CHECK(p0.coeff(0) == 1);
    CHECK(p0.coeff(1) == 2);
    CHECK(p0.coeff(2) == 1);

    auto p4 = nico::f_r_poly(DivisorShape{{4}});  // (t + 1)(t + 3)
    CHECK(p4.coeff(0) == 3);
    CHECK(p4.coeff(1) == 4);

    CHECK(nico::rightmost_root(DivisorShape{{4}}) == QuadSurd(-1L));
    CHECK(nico::rightmost_root(DivisorShape{{1, 1}}) ==
          QuadSurd(Int(-11), Int(1), Int(73), Int(8)));
    CHECK_THROWS_AS(nico::rightmost_root(DivisorShape{{0}}), std::domain_error);
}

TEST_CASE("translation identity for divisor-count sequences") {
    for (auto alphas : std::vector<std::vector<long>>{{0}, {3}, {2, 1}, {1, 1, 1}, {4, 2, 1}}) {
        DivisorShape shape{alphas};
        CHECK(nico::divisor_translate_identity_check(shape));
        CHECK(nico::nu(nico::divisor_tau_sequence(alphas)).is_zero());
    }
}

TEST_CASE("sweeping all small shapes") {
    auto sweep = nico::divisor_identity_sweep(200);
    CHECK(sweep.pass);
    CHECK(sweep.shapes > 50);
    CHECK_THROWS_AS(nico::divisor_identity_sweep(0), std::invalid_argument);
}

TEST_CASE("limit constants are pinned surds") {
    CHECK(nico::equal_exponent_limit(2) == QuadSurd(Int(3), Int(1), Int(105), Int(12)));
    CHECK(nico::equal_exponent_limit(3) == QuadSurd(Int(15), Int(1), Int(545), Int(8)));
    CHECK_THROWS_AS(nico::equal_exponent_limit(4), std::invalid_argument);

    CHECK(nico::truncation_limit(2) == QuadSurd(Int(-1), Int(1), Int(33), Int(8)));
    CHECK(nico::truncation_limit(3) == QuadSurd(Int(0), Int(2), Int(3), Int(3)));
    CHECK(nico::truncation_limit(4) == QuadSurd(Int(1), Int(1), Int(161), Int(8)));

    CHECK(nico::rescaled_limit() == QuadSurd(Int(3), Int(1), Int(105), Int(24)));
}

TEST_CASE("difference probes converge at modest depth") {
    auto rep = nico::difference_limit_probe(2, 400, 30, Rat(1, 100));
    CHECK(rep.pass);
    REQUIRE_FALSE(rep.samples.empty());
    CHECK(rep.samples.back().error < rep.samples.front().error);

    auto t3 = nico::truncation_first_difference(3, 400, 30, Rat(1, 100));
    CHECK(t3.pass);

    CHECK_THROWS_AS(nico::difference_limit_probe(2, 2, 30, Rat(1)), std::invalid_argument);
}

TEST_CASE("rescaled family cross-sections") {
    auto q5 = nico::rescaled_minpoly(5);  // 12x^2 - 9x - 70
    CHECK(q5.coeff(2) == 12);
    CHECK(q5.coeff(1) == -9);
    CHECK(q5.coeff(0) == -70);

    // the same array read along m at fixed x
    auto row = nico::rescaled_family_in_m(Rat(2));
    CHECK(row.eval(Rat(5)) == q5.eval(Rat(2)));

    CHECK(nico::rescaled_disc_in_x(5) == Rat(3 * 31 * 37));  // (m+1)^2 (5m+6)(7m+2)/12 at m=5
    CHECK(nico::rescaled_discriminant_checks());

    auto rep = nico::rescaled_root_difference_limit(150, 30, Rat(1, 100));
    CHECK(rep.pass);
}
