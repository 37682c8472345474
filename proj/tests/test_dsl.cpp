#include "doctest.h"

#include "nico/dsl.hpp"
#include "nico/families.hpp"

using nico::Int;
using nico::QuadSurd;
using nico::Rat;
using nico::Sequence;

namespace {
Sequence run(const std::string& text) { return nico::eval(nico::parse(text)); }
}  // namespace

TEST_CASE("ranges, literals, and scalar forms") {
    CHECK(run("[1..5]") == Sequence::range(1, 5));
    CHECK(run("[3..1]").empty());
    CHECK(run("{}").empty());
    CHECK(run("{1, -2, 5/2}") == Sequence({QuadSurd(1L), QuadSurd(-2L), QuadSurd(Rat(5, 2))}));
    CHECK(run("{(1+2*sqrt(3))/4}") ==
          Sequence({QuadSurd(Int(1), Int(2), Int(3), Int(4))}));
    CHECK(run("{(1-1*sqrt(5))/4}") ==
          Sequence({QuadSurd(Int(1), Int(-1), Int(5), Int(4))}));
}

TEST_CASE("whitespace and comments are free") {
    CHECK(run("  join( [1..2] ,\n  {3} )  # trailing note\n") == Sequence::range(1, 3));
    CHECK(run("shift(\n# a comment line\n[1..3], 2)") == Sequence::range(3, 5));
}

TEST_CASE("every builtin evaluates to its library call") {
    CHECK(run("shift([1..4], 3)") == nico::translate(Sequence::range(1, 4), QuadSurd(3L)));
    CHECK(run("shiftset([1..19], {6,13}, 5/2)") ==
          nico::translate_subset(Sequence::range(1, 19), nico::Selector::indices({6, 13}), QuadSurd(Rat(5, 2))));
    CHECK(run("scaleset([1..6], mod(2,0), 1/2)") ==
          nico::scale_subset(Sequence::range(1, 6), nico::Selector::mod(2, 0), QuadSurd(Rat(1, 2))));
    CHECK(run("rep([1..3], 2)") == nico::repeat_all(Sequence::range(1, 3), 2));
    CHECK(run("prod({1,2}, {1,3})") ==
          nico::bag_product(Sequence({QuadSurd(1L), QuadSurd(2L)}), Sequence({QuadSurd(1L), QuadSurd(3L)})));
    CHECK(run("pow({1,2}, 5)").size() == 32);
    CHECK(run("join([1..2], {7})").size() == 3);
    CHECK(run("adjoin([1..16], 2, 18)") ==
          nico::adjoin(Sequence::range(1, 16), {QuadSurd(2L), QuadSurd(18L)}));
    CHECK(run("omit([1..5], 3)") == Sequence({QuadSurd(1L), QuadSurd(2L), QuadSurd(4L), QuadSurd(5L)}));
    CHECK(run("family(sigma_m, 7)") == nico::make_family_sequence("sigma_m", {7}));
    CHECK(run("family(gap_12)") == nico::make_family_sequence("gap_12", {}));
}

TEST_CASE("the repeated-shift showcase") {
    Sequence s = run("shift(join(rep([1..14], 6), {}), 90)");
    CHECK(s.size() == 98);
    CHECK(nico::nu(s).is_zero());
}

TEST_CASE("nesting composes") {
    Sequence s = run("shiftset(prod({1,2}, {1,3}), {1,4}, 1/2)");
    // product {1,2,3,6}: positions 1 and 4 get the half shift
    CHECK(nico::sum(s) == QuadSurd(13L));
}

TEST_CASE("parse errors carry the offending location") {
    try {
        nico::parse("1..19]");
        FAIL("expected a parse error");
    } catch (const nico::ParseError& e) {
        CHECK(e.offset() == 0);
        CHECK(e.line() == 1);
        CHECK(e.column() == 1);
    }

    try {
        nico::parse("join([1..3]; {4})");
        FAIL("expected a parse error");
    } catch (const nico::ParseError& e) {
        CHECK(e.offset() == 11);
    }

    try {
        nico::parse("shift(\n  [1..3},\n  2)");
        FAIL("expected a parse error");
    } catch (const nico::ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("2:") == 0);
    }

    CHECK_THROWS_AS(nico::parse("pow({1,2}, 2) trailing"), nico::ParseError);
    CHECK_THROWS_AS(nico::parse("frobnicate([1..3])"), nico::ParseError);
    CHECK_THROWS_AS(nico::parse("family(mod, 3)"), nico::ParseError);
    CHECK_THROWS_AS(nico::parse("{(1+2*sqrt(-3))/4}"), nico::ParseError);
    CHECK_THROWS_AS(nico::parse("shiftset([1..5], {0}, 1)"), nico::ParseError);
    CHECK_THROWS_AS(nico::parse(""), nico::ParseError);
}

TEST_CASE("evaluation errors point back into the source") {
    try {
        nico::eval(nico::parse("omit([1..5], 7)"));
        FAIL("expected an evaluation error");
    } catch (const nico::EvalError& e) {
        CHECK(e.offset() == 0);
        CHECK(std::string(e.what()).find("not present") != std::string::npos);
    }

    try {
        nico::eval(nico::parse("join({1}, family(pell_gap, 3, 7))"));
        FAIL("expected an evaluation error");
    } catch (const nico::EvalError& e) {
        CHECK(e.offset() == 10);  // the inner family call, not the join
    }

    CHECK_THROWS_AS(nico::eval(nico::parse("rep([1..3], -1)")), nico::EvalError);
    CHECK_THROWS_AS(nico::eval(nico::parse("pow({1,2}, 0)")), nico::EvalError);
}

TEST_CASE("formatting is canonical and stable") {
    CHECK(nico::format(nico::parse("  shift( [1..3] ,2)")) == "shift([1..3], 2)");
    CHECK(nico::format(nico::parse("{ 1 ,2, 5/2 }")) == "{1, 2, 5/2}");
    CHECK(nico::format(nico::parse("shiftset([1..19],{6,13},5/2)")) ==
          "shiftset([1..19], {6,13}, 5/2)");

    for (const char* text : {
             "[1..2000]",
             "{}",
             "{-7, 1/3, (0+2*sqrt(7))/3}",
             "rep([1..14], 6)",
             "prod(pow({1,2}, 3), {1,3})",
             "join(adjoin([1..5], 2, 7), omit([1..4], 2))",
             "scaleset([1..6], mod(3,2), -5/4)",
             "shiftset(family(sigma_m, 9), {1,2}, 1)",
             "family(fib_blocks, 2, 1)",
             "shift({(1-1*sqrt(5))/4}, 2)",
         }) {
        auto e1 = nico::parse(text);
        std::string canon = nico::format(e1);
        auto e2 = nico::parse(canon);
        CHECK(nico::equal(e1, e2));
        CHECK(nico::format(e2) == canon);
    }

    auto a = nico::parse("join({1},{2})");
    auto b = nico::parse("join({2},{1})");
    CHECK_FALSE(nico::equal(a, b));
}

TEST_CASE("standalone selector parsing") {
    auto sel = nico::parse_selector_text(" {2, 5} ");
    CHECK_FALSE(sel.is_mod());
    CHECK(sel.index_list() == std::vector<std::size_t>{2, 5});

    auto m = nico::parse_selector_text("mod(3, 1)");
    CHECK(m.is_mod());
    CHECK(m.modulus() == 3);
    CHECK(m.residue() == 1);

    CHECK_THROWS_AS(nico::parse_selector_text("{1,2} extra"), nico::ParseError);
    CHECK_THROWS_AS(nico::parse_selector_text("mod(0, 1)"), nico::ParseError);
}
