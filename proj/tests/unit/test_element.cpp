#include <doctest.h>

#include <random>

#include "lfspec/character.hpp"
#include "lfspec/field.hpp"

using namespace lfspec;

namespace {

Element padic(long long p, const Rational& r, long long prec = 32) {
    return Element::from_rational(FieldModel::padic(p), r, prec);
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational::pow_int(2, -3) == Rational(1, 8));
    CHECK(Rational(7).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("field model validates the prime") {
    CHECK_THROWS_AS(FieldModel::padic(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldModel::laurent(1), std::invalid_argument);
    CHECK(FieldModel::padic(2).p == 2);
}

TEST_CASE("padic addition carries to the right") {
    auto m = FieldModel::padic(2);
    Element one = Element::from_integer(m, 1, 8);
    Element two = one + one;
    CHECK(two.valuation() == 1);
    CHECK(two.digit_at(1) == 1);
    CHECK(two.digit_at(2) == 0);
    CHECK(two.abs() == Rational(1, 2));
}

TEST_CASE("laurent addition in characteristic 2 cancels") {
    auto m = FieldModel::laurent(2);
    Element x = Element::from_digits(m, 0, {1, 1}, 8); // 1 + T
    Element s = x + x;
    CHECK(s.is_zero());
    CHECK(s.prec() == 8);
}

TEST_CASE("telescoping carry: (...222) + 1 = 0 in Q_3") {
    auto m = FieldModel::padic(3);
    Element minus_one = -Element::from_integer(m, 1, 10);
    for (long long i = 0; i < 10; ++i) CHECK(minus_one.digit_at(i) == 2);
    Element s = minus_one + Element::from_integer(m, 1, 10);
    CHECK(s.is_zero());
    CHECK(s.prec() == 10);
}

TEST_CASE("multiplication is exactly multiplicative on absolute values") {
    auto m = FieldModel::padic(2);
    Element eight = Element::from_integer(m, 8, 12);
    CHECK(eight.abs() == Rational(1, 8));
    Element three = Element::from_integer(m, 3, 12);
    Element nine = three * three;
    CHECK(nine.valuation() == 0);
    CHECK(nine.digit_at(0) == 1);
    CHECK(nine.digit_at(1) == 0);
    CHECK(nine.digit_at(2) == 0);
    CHECK(nine.digit_at(3) == 1);

    auto lm = FieldModel::laurent(3);
    Element tinv = Element::from_digits(lm, -1, {1}, 8);
    Element t2 = Element::from_digits(lm, 2, {1}, 8);
    Element t = tinv * t2;
    CHECK(t.valuation() == 1);
}

TEST_CASE("mixed-model arithmetic is rejected") {
    Element a = Element::from_integer(FieldModel::padic(2), 1);
    Element b = Element::from_integer(FieldModel::padic(3), 1);
    Element c = Element::from_integer(FieldModel::laurent(2), 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("precision bookkeeping follows the window rules") {
    auto m = FieldModel::padic(5);
    Element x = Element::from_rational(m, Rational(1, 5), 4);  // v=-1, N=4
    Element y = Element::from_rational(m, Rational(2), 7);     // v=0,  N=7
    CHECK((x + y).prec() == 4);
    // product precision = min(v1+N2, v2+N1)
    CHECK((x * y).prec() == std::min(-1 + 7, 0 + 4));
    CHECK_THROWS_AS(x.digit_at(4), precision_error);
}

TEST_CASE("fractional part (Q_p)") {
    CHECK(padic(2, Rational(1, 2)).fractional_part() == Rational(1, 2));
    CHECK(padic(2, Rational(3)).fractional_part() == Rational(0));
    // 1/9 + 2/3 = 7/9: digits 1*3^-2 + 2*3^-1
    Element x = padic(3, Rational(1, 9)) + padic(3, Rational(2, 3));
    CHECK(x.fractional_part() == Rational(7, 9));
    CHECK_THROWS_AS(Element::from_integer(FieldModel::laurent(2), 1).fractional_part(),
                    std::domain_error);
}

TEST_CASE("laurent residue coordinate") {
    auto m = FieldModel::laurent(2);
    Element tinv = Element::from_digits(m, -1, {1}, 8);
    CHECK(tinv.laurent_residue_coordinate() == 1);
    CHECK(Element::from_integer(m, 1).laurent_residue_coordinate() == 0);
}

TEST_CASE("negation round-trips") {
    Element x = padic(7, Rational(23, 49));
    CHECK((x + (-x)).is_zero());
}

TEST_CASE("multiplicative inverses at finite precision") {
    auto m2 = FieldModel::padic(2);
    Element x = Element::from_rational(m2, Rational(3, 4), 20);
    Element xi = x.inverse();
    CHECK(xi.valuation() == 2);
    CHECK((x * xi - Element::from_integer(m2, 1, 20)).is_zero());

    auto m5 = FieldModel::padic(5);
    Element y = Element::from_rational(m5, Rational(7, 25), 16);
    CHECK((y * y.inverse() - Element::from_integer(m5, 1, 16)).is_zero());

    auto lm = FieldModel::laurent(2);
    Element t = Element::from_digits(lm, -1, {1, 1, 0, 1}, 12); // T^-1 + 1 + T^2
    CHECK((t * t.inverse() - Element::from_integer(lm, 1, 12)).is_zero());

    CHECK_THROWS_AS(Element::zero(m2).inverse(), std::domain_error);
}

TEST_CASE("ultrametric inequality, with equality for distinct absolute values") {
    std::mt19937_64 rng(7);
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int iter = 0; iter < 300; ++iter) {
            long long a = static_cast<long long>(rng() % 2000) - 1000;
            long long b = static_cast<long long>(rng() % 2000) - 1000;
            long long da = 1 + static_cast<long long>(rng() % 60);
            long long db = 1 + static_cast<long long>(rng() % 60);
            while (da % p == 0) ++da;
            while (db % p == 0) ++db;
            Element x = padic(p, Rational(a, da));
            Element y = padic(p, Rational(b, db));
            Element s = x + y;
            Rational ax = x.abs(), ay = y.abs(), as = s.abs();
            Rational mx = ax > ay ? ax : ay;
            CHECK(as <= mx);
            if (ax != ay) CHECK(as == mx);
            // |xy| = |x| |y|
            CHECK((x * y).abs() == ax * ay);
        }
    }
}

TEST_CASE("rational embedding agrees with digit windows exhaustively (small)") {
    // Every k in [0, p^4) embeds with digits equal to its base-p expansion.
    for (long long p : {2LL, 3LL}) {
        auto m = FieldModel::padic(p);
        long long p4 = p * p * p * p;
        for (long long k = 0; k < p4; ++k) {
            Element e = Element::from_integer(m, k, 8);
            long long rec = 0, mult = 1;
            for (long long i = 0; i < 8; ++i) {
                rec += mult * e.digit_at(i);
                mult *= p;
            }
            CHECK(rec == k);
        }
    }
}

TEST_CASE("vector norm refuses to guess when an unknown component may dominate") {
    auto m = FieldModel::padic(2);
    Element tiny = Element::from_digits(m, 20, {1}, 30); // |x| = 2^-20
    Element unknown = Element::zero(m, 10);              // |x| <= 2^-10
    CHECK_THROWS_AS(Vec(std::vector<Element>{tiny, unknown}).abs_exp(), precision_error);
    // a known component at or above the bound settles the maximum
    Vec w(std::vector<Element>{Element::from_integer(m, 1, 30), unknown});
    CHECK(*w.abs_exp() == 0);
}

TEST_CASE("vector norm and dot product") {
    auto m = FieldModel::padic(2);
    Vec x(std::vector<Element>{padic(2, Rational(1, 2)), padic(2, Rational(4))});
    CHECK(*x.abs_exp() == 1);
    Vec y(std::vector<Element>{padic(2, Rational(1)), padic(2, Rational(1))});
    Element d = x.dot(y);
    CHECK(d.fractional_part() == Rational(1, 2));
    Vec z(std::vector<Element>{padic(2, Rational(0))});
    CHECK_THROWS_AS(x.dot(z), std::invalid_argument);
    (void)m;
}
