#include "doctest.h"

#include "nico/sequence.hpp"

using nico::Int;
using nico::QuadSurd;
using nico::Rat;
using nico::Selector;
using nico::Sequence;

namespace {
QuadSurd q(long v) { return QuadSurd(v); }
}  // namespace

TEST_CASE("the classical identity") {
    for (long n : {1L, 2L, 10L, 50L}) {
        Sequence s = Sequence::range(1, n);
        Rat t(n * (n + 1) / 2);
        CHECK(nico::sum(s).rational() == t);
        CHECK(nico::cube_sum(s).rational() == t * t);
        CHECK(nico::nu(s).is_zero());
    }
    CHECK(Sequence::range(3, 1).empty());
}

TEST_CASE("printing is sorted with multiplicity") {
    Sequence s({q(4), q(1), q(2), q(2)});
    CHECK(s.str() == "{1, 2, 2, 4}");
    CHECK(s.sorted().front() == q(1));
    CHECK(s == Sequence({q(2), q(1), q(4), q(2)}));
}

TEST_CASE("sequences refuse mixed radicands") {
    QuadSurd r2(Int(0), Int(1), Int(2), Int(1));
    QuadSurd r3(Int(0), Int(1), Int(3), Int(1));
    CHECK(Sequence({q(1), r2}).field_d() == 2);
    CHECK(Sequence({q(1), q(2)}).field_d() == 0);
    CHECK_THROWS_AS(Sequence({r2, r3}), std::invalid_argument);
}

TEST_CASE("selectors pick by position or residue") {
    Sequence s = Sequence::range(1, 10);
    Selector by_index = Selector::indices({2, 5, 9});
    CHECK(by_index.str() == "{2,5,9}");
    auto picked = by_index.resolve(s);
    REQUIRE(picked.size() == 3);
    CHECK(picked[0] == 1);  // 0-based positions into the sorted view
    CHECK(picked[2] == 8);

    Selector by_mod = Selector::mod(3, 1);
    CHECK(by_mod.str() == "mod(3,1)");
    CHECK(by_mod.resolve(s).size() == 4);  // 1, 4, 7, 10

    CHECK_THROWS_AS(Selector::indices({11}).resolve(s), std::out_of_range);
    CHECK_THROWS_AS(Selector::mod(0, 1), std::invalid_argument);
}

TEST_CASE("translate all or a subset") {
    Sequence s = Sequence::range(1, 5);
    Sequence shifted = nico::translate(s, q(3));
    CHECK(shifted.sorted().front() == q(4));
    CHECK(nico::sum(shifted) == q(30));

    // shift positions 6 and 13 of [1..19] by 5/2: total 190 + 5 = 195
    Sequence tau = nico::translate_subset(Sequence::range(1, 19), Selector::indices({6, 13}), QuadSurd(Rat(5, 2)));
    CHECK(nico::sum(tau) == q(195));
    CHECK(nico::nu(tau).is_zero());
}

TEST_CASE("scaling a subset hits the known sample value") {
    Sequence s = Sequence::range(1, 6);
    Sequence scaled = nico::scale_subset(s, Selector::indices({2, 4, 6}), QuadSurd(Rat(1, 2)));
    CHECK(nico::nu(scaled) == q(36));
}

TEST_CASE("bag product multiplies sums and cube sums") {
    Sequence a({q(1), q(2)});
    Sequence b({q(1), q(3)});
    Sequence p = nico::bag_product(a, b);
    CHECK(p.size() == 4);
    CHECK(nico::sum(p) == nico::sum(a) * nico::sum(b));
    CHECK(nico::cube_sum(p) == nico::cube_sum(a) * nico::cube_sum(b));

    Sequence sq = nico::bag_power(a, 2);
    CHECK(sq == Sequence({q(1), q(2), q(2), q(4)}));
    CHECK(nico::nu(sq).is_zero());
    CHECK_THROWS_AS(nico::bag_power(a, 0), std::invalid_argument);
}

TEST_CASE("repeat, join, adjoin, remove") {
    Sequence s = Sequence::range(1, 2);
    Sequence r = nico::repeat_all(s, 2);
    CHECK(r.size() == 6);
    CHECK(nico::sum(r) == q(9));
    CHECK_THROWS_AS(nico::repeat_all(s, -1), std::invalid_argument);

    Sequence j = nico::join(s, Sequence({q(7)}));
    CHECK(j.size() == 3);
    CHECK(nico::join(s, Sequence(std::vector<QuadSurd>{})) == s);

    Sequence adj = nico::adjoin(Sequence::range(1, 5), {q(2), q(18)});
    CHECK(adj.size() == 7);

    Sequence rem = nico::remove_one(Sequence({q(1), q(2), q(2)}), q(2));
    CHECK(rem == Sequence({q(1), q(2)}));
    CHECK_THROWS_AS(nico::remove_one(rem, q(9)), std::invalid_argument);
}

TEST_CASE("divisor counting sequences satisfy the identity") {
    // N = p*q: divisors 1, p, q, pq carry 1, 2, 2, 4 divisors
    Sequence t = nico::divisor_tau_sequence({1, 1});
    CHECK(t == Sequence({q(1), q(2), q(2), q(4)}));
    CHECK(nico::nu(t).is_zero());

    Sequence t2 = nico::divisor_tau_sequence({2, 1, 3});
    CHECK(t2.size() == 24);
    CHECK(nico::nu(t2).is_zero());
    CHECK_THROWS_AS(nico::divisor_tau_sequence({-1}), std::invalid_argument);
}
