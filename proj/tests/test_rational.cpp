#include "reven/error.hpp"
#include "reven/rational.hpp"

#include <doctest.h>

using namespace reven;

TEST_CASE("make_rat canonicalizes sign and gcd") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(-2, 4) == make_rat(1, -2));
    CHECK(make_rat(0, 7) == Rat(0));
    CHECK(make_rat(6) == Rat(6));
    CHECK_THROWS_AS(make_rat(1, 0), UsageError);
}

TEST_CASE("canonical and human renderings") {
    CHECK(rat_canonical(make_rat(3)) == "3/1");
    CHECK(rat_canonical(make_rat(-1, 2)) == "-1/2");
    CHECK(rat_canonical(Rat(0)) == "0/1");
    CHECK(rat_human(make_rat(3)) == "3");
    CHECK(rat_human(make_rat(-1, 2)) == "-1/2");
    CHECK(rat_human(Rat(0)) == "0");
}

TEST_CASE("parse_rat round trips and rejects junk") {
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("3/6") == make_rat(1, 2));
    CHECK(parse_rat("-3/6") == make_rat(-1, 2));
    CHECK(parse_rat("4/-6") == make_rat(-2, 3));
    CHECK_THROWS_AS(parse_rat(""), UsageError);
    CHECK_THROWS_AS(parse_rat("x"), UsageError);
    CHECK_THROWS_AS(parse_rat("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rat("1/2/3"), UsageError);
}

TEST_CASE("integer predicates and conversion") {
    CHECK(rat_is_integer(Rat(5)));
    CHECK(!rat_is_integer(make_rat(5, 2)));
    CHECK(rat_to_i64(Rat(-12)) == -12);
    CHECK_THROWS_AS(rat_to_i64(make_rat(1, 2)), InternalError);
    CHECK(rat_to_double(make_rat(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("floor_div handles signs and fractions") {
    CHECK(floor_div(Rat(10), 3) == 3);
    CHECK(floor_div(Rat(9), 3) == 3);
    CHECK(floor_div(make_rat(9, 2), 2) == 2);  // floor(4.5 / 2)
    CHECK(floor_div(make_rat(-1, 2), 1) == -1);
    CHECK(floor_div(Rat(-7), 2) == -4);
    CHECK(floor_div(Rat(0), 5) == 0);
}

TEST_CASE("rat_pow") {
    CHECK(rat_pow(2, 10) == Rat(1024));
    CHECK(rat_pow(-3, 3) == Rat(-27));
    CHECK(rat_pow(5, 0) == Rat(1));
}
