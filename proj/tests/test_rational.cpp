#include <doctest.h>

#include "qbounds/errors.hpp"
#include "qbounds/rational.hpp"

using namespace qbounds;

TEST_CASE("rationals are canonical and print as p/q") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(8, 4)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), ParameterError);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("19/8") == make_rational(19, 8));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), ParameterError);
    CHECK_THROWS_AS(parse_rational("abc"), ParameterError);
    CHECK_THROWS_AS(parse_rational(""), ParameterError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParameterError);
}

TEST_CASE("binomial against Pascal's rule") {
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("powers and logarithms") {
    CHECK(ipow(3, 4) == 81);
    CHECK(pow2(-3) == make_rational(1, 8));
    CHECK(floor_log2(Rational(64)) == 6);
    CHECK(floor_log2(Rational(76)) == 6);
    CHECK(floor_log2(make_rational(1, 2)) == -1);
    CHECK(floor_log2(make_rational(3, 8)) == -2);
}

TEST_CASE("falling binomial matches the integer binomial") {
    for (int x = 0; x <= 8; ++x)
        for (unsigned j = 0; j <= 8; ++j) CHECK(falling_binomial(x, j) == Rational(binomial(x, j)));
    CHECK(falling_binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
}
