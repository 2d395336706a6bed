#include <doctest.h>

#include "lfspec/parse.hpp"

using namespace lfspec;

TEST_CASE("rational grammar") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("2^-3 * 5") == Rational(5, 8));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational(" 5 * 3^2 ") == Rational(45));
    CHECK(parse_rational("2^3") == Rational(8));
    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("padic literals") {
    auto m = FieldModel::padic(2);
    Element e = parse_element(m, "padic(p=2, \"101\", v=-1)");
    CHECK(e.valuation() == -1);
    CHECK(e.digit_at(-1) == 1);
    CHECK(e.digit_at(0) == 0);
    CHECK(e.digit_at(1) == 1);
    CHECK(parse_element(m, "padic(p=2, \"\", v=0)").is_zero());
    CHECK_THROWS_AS(parse_element(m, "padic(p=3, \"1\", v=0)"), parse_error); // model mismatch
    CHECK_THROWS_AS(parse_element(m, "padic(p=2, 101, v=0)"), parse_error);  // unquoted digits
}

TEST_CASE("rational form elements") {
    auto m = FieldModel::padic(2);
    Element e = parse_element(m, "2^-3 * 5");
    CHECK(e.valuation() == -3);
    CHECK(e.fractional_part() == Rational(5, 8));
}

TEST_CASE("laurent polynomials") {
    auto m = FieldModel::laurent(3);
    Element e = parse_element(m, "T^-1 + 1 + 2*T^2");
    CHECK(e.valuation() == -1);
    CHECK(e.digit_at(-1) == 1);
    CHECK(e.digit_at(0) == 1);
    CHECK(e.digit_at(1) == 0);
    CHECK(e.digit_at(2) == 2);
    CHECK(parse_element(m, "T").valuation() == 1);
    // coefficients reduce mod p
    CHECK(parse_element(m, "3*T").is_zero());
    CHECK_THROWS_AS(parse_element(m, "T^"), parse_error);
}

TEST_CASE("point lists split at the top level") {
    auto pts = parse_point_list(FieldModel::padic(2), "0, 1/2, padic(p=2, \"11\", v=0)");
    CHECK(pts.size() == 3);
    CHECK(pts[1][0].fractional_part() == Rational(1, 2));
    CHECK(pts[2][0].digit_at(1) == 1);

    auto lpts = parse_point_list(FieldModel::laurent(2), "T^-1 + 1; T");
    CHECK(lpts.size() == 2);
}

TEST_CASE("balls and compact open sets") {
    auto m = FieldModel::padic(2);
    Ball b = parse_ball(m, "ball(0, 2^1)");
    CHECK(b.radius_exp == 1);
    Ball half = parse_ball(m, "ball(3, 1/2)");
    CHECK(half.radius_exp == -1);
    CHECK_THROWS_AS(parse_ball(m, "ball(0, 3)"), parse_error);   // not a power of 2
    CHECK_THROWS_AS(parse_ball(m, "ball(0)"), parse_error);

    CompactOpenSet O = parse_compact_open(m, "ball(0, 1/2) + ball(3, 1/2)");
    CHECK(O.ball_count() == 2);
    CHECK(O.measure() == Rational(1));
    CompactOpenSet U = parse_compact_open(m, "ball(0,1) ∪ ball(1/2,1)");
    CHECK(U.ball_count() == 2);
    CompactOpenSet V = parse_compact_open(m, "ball(0,1) u ball(1/2,1)");
    CHECK(V.ball_count() == 2);
    CHECK_THROWS_AS(parse_compact_open(m, "ball(0,1) + ball(1,1)"), std::invalid_argument);
}

TEST_CASE("residue lists") {
    CHECK(parse_residue_list("0,3,4,7") == std::vector<long long>({0, 3, 4, 7}));
    CHECK_THROWS_AS(parse_residue_list("1,x"), parse_error);
}
