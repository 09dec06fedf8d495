#include "arraudit/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace arraudit;

TEST_SUITE("rational") {

TEST_CASE("make_rational reduces to lowest terms") {
    CHECK(make_rational(6, 4) == make_rational(3, 2));
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK(make_rational(0, 5) == Rational(0));
    CHECK(to_string(make_rational(0, 5)) == "0");
}

TEST_CASE("make_rational normalizes the sign into the numerator") {
    const Rational q = make_rational(2, -4);
    CHECK(q == make_rational(-1, 2));
    CHECK(to_string(q) == "-1/2");
    CHECK(denominator(q) == 2);
    CHECK(make_rational(-3, -6) == make_rational(1, 2));
}

TEST_CASE("make_rational rejects a zero denominator") {
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(make_rational(0, 0), std::domain_error);
}

TEST_CASE("to_string omits a unit denominator") {
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(to_string(make_rational(10, 2)) == "5");
    CHECK(to_string(Integer(123)) == "123");
}

TEST_CASE("parse_rational accepts p and p/q") {
    CHECK(parse_rational("3/2") == make_rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("21/14") == make_rational(3, 2));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
}

TEST_CASE("parse_rational rejects garbage") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1 / 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("parse_integer is strict decimal") {
    CHECK(parse_integer("42") == 42);
    CHECK(parse_integer("-17") == -17);
    CHECK(parse_integer("0") == 0);
    CHECK(parse_integer("123456789012345678901234567890") ==
          Integer("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("4.2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("--1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
}

TEST_CASE("string round trip") {
    for (const char* text : {"0", "-1", "3/2", "-22/7", "100000000000000000001/3"}) {
        CHECK(to_string(parse_rational(text)) == text);
    }
}

TEST_CASE("choose2 counts unordered pairs") {
    CHECK(choose2(0) == 0);
    CHECK(choose2(1) == 0);
    CHECK(choose2(2) == 1);
    CHECK(choose2(5) == 10);
    CHECK(choose2(21) == 210);
    CHECK_THROWS_AS(choose2(-1), std::domain_error);
}

TEST_CASE("exact arithmetic has no rounding") {
    const Rational third = make_rational(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(make_rational(1, 10) + make_rational(2, 10) == make_rational(3, 10));
    CHECK(make_rational(7, 12) - make_rational(1, 4) == make_rational(1, 3));
    CHECK(make_rational(3, 4) * make_rational(8, 9) == make_rational(2, 3));
    CHECK(make_rational(3, 4) / make_rational(9, 8) == make_rational(2, 3));
}

} // TEST_SUITE
