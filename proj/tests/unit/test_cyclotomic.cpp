#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "lfspec/character.hpp"
#include "lfspec/cyclotomic.hpp"

using namespace lfspec;

TEST_CASE("phases reduce to canonical form") {
    auto ph = RootOfUnityPhase::make(2, 4, 3); // exp(2 pi i 4/8) = i
    CHECK(ph.level == 1);
    CHECK(ph.k == 1);
    auto one = RootOfUnityPhase::make(3, 9, 2);
    CHECK(one.is_one());
    auto m = RootOfUnityPhase::make(2, 1, 1) * RootOfUnityPhase::make(2, 1, 1);
    CHECK(m.is_one());
    CHECK(RootOfUnityPhase::make(5, 7, 2).conj() == RootOfUnityPhase::make(5, -7, 2));
}

TEST_CASE("spec cyclotomic zero examples") {
    // p=2, M=3: 1 + z + z^4 + z^5 = 0 (z^4 = -1)
    CyclotomicSum s(2, 3);
    s.add_term(0, Rational(1));
    s.add_term(1, Rational(1));
    s.add_term(4, Rational(1));
    s.add_term(5, Rational(1));
    CHECK(s.is_zero());

    // p=2, M=3: 1 + z^2 != 0 (1 + i)
    CyclotomicSum t(2, 3);
    t.add_term(0, Rational(1));
    t.add_term(2, Rational(1));
    CHECK(!t.is_zero());

    // p=3, M=1: full orbit sum
    CyclotomicSum u(3, 1);
    u.add_term(0, Rational(1));
    u.add_term(1, Rational(1));
    u.add_term(2, Rational(1));
    CHECK(u.is_zero());
}

TEST_CASE("level unification embeds by exponent scaling") {
    CyclotomicSum a(2, 1); // -1 = z_2^1
    a.add_term(1, Rational(1));
    CyclotomicSum b(2, 3);
    b.add_term(4, Rational(1)); // z_8^4 = -1
    CHECK((a - b).is_zero());
}

TEST_CASE("conjugation and norm squared") {
    CyclotomicSum s(2, 3);
    s.add_term(1, Rational(1));
    s.add_term(0, Rational(1)); // 1 + z_8
    auto n = s.norm_sq();       // 2 + z + z^{-1} = 2 + sqrt(2)
    auto approx = n.to_complex();
    CHECK(std::abs(approx.imag()) < 1e-12);
    CHECK(approx.real() == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(!n.as_rational().has_value());

    CyclotomicSum r(3, 1);
    r.add_term(1, Rational(1)); // z_3
    auto nr = r.norm_sq().as_rational();
    REQUIRE(nr.has_value());
    CHECK(*nr == Rational(1));
}

TEST_CASE("as_rational recognizes hidden rationals") {
    // z + z^2 = -1 at p=3, M=1
    CyclotomicSum s(3, 1);
    s.add_term(1, Rational(1));
    s.add_term(2, Rational(1));
    auto r = s.as_rational();
    REQUIRE(r.has_value());
    CHECK(*r == Rational(-1));
}

TEST_CASE("zero test agrees with floating point on random sums") {
    // Floating point is the cross-check oracle here, never the decision.
    std::mt19937_64 rng(20260808);
    int zero_count = 0;
    const int kTrials = 10000;
    for (int t = 0; t < kTrials; ++t) {
        long long p = std::vector<long long>{2, 3, 5}[rng() % 3];
        long long M = 1 + static_cast<long long>(rng() % 6); // levels up to p^6
        CyclotomicSum s(p, M);
        long long n = s.order();
        int terms = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < terms; ++i)
            s.add_term(static_cast<long long>(rng() % static_cast<unsigned long long>(n)),
                       Rational(static_cast<long long>(rng() % 9) - 4));
        // Half the time, force structural zeros in by adding a full relation
        // sum_{j<p} z^{k + j p^{M-1}}.
        if (rng() % 2 == 0) {
            long long k = static_cast<long long>(rng() % static_cast<unsigned long long>(n));
            Rational c(static_cast<long long>(rng() % 5) + 1);
            for (long long j = 0; j < p; ++j) s.add_term(k + j * (n / p), c);
        }
        bool exact_zero = s.is_zero();
        double mag = std::abs(s.to_complex());
        if (exact_zero) {
            ++zero_count;
            CHECK(mag < 1e-10);
        } else {
            CHECK(mag > 1e-10);
        }
    }
    // The generator above makes both outcomes common.
    CHECK(zero_count > 100);
    CHECK(zero_count < kTrials - 100);
}

TEST_CASE("pow_ll guards ridiculous levels") {
    CHECK_THROWS_AS(CyclotomicSum(2, 60), std::overflow_error);
}
