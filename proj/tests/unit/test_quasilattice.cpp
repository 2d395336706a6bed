#include <doctest.h>

#include <random>

#include "lfspec/quasilattice.hpp"

using namespace lfspec;

namespace {

Vec qp(long long p, const Rational& r, long long prec = 48) {
    return rational_point(FieldModel::padic(p), r, prec);
}

} // namespace

TEST_CASE("enumerate matches the V_m construction") {
    QuasiLattice L(FieldModel::padic(2));
    auto pts = L.enumerate(2);
    REQUIRE(pts.size() == 4);
    std::vector<Rational> expect{{0, 1}, {1, 2}, {1, 4}, {3, 4}};
    for (size_t i = 0; i < 4; ++i)
        CHECK((pts[i] - qp(2, expect[i])).abs_exp() == std::nullopt);

    QuasiLattice L3(FieldModel::padic(3));
    auto pts3 = L3.enumerate(1);
    REQUIRE(pts3.size() == 3);
    CHECK((pts3[1] - qp(3, Rational(1, 3))).abs_exp() == std::nullopt);
    CHECK((pts3[2] - qp(3, Rational(2, 3))).abs_exp() == std::nullopt);

    CHECK(L.enumerate(0).size() == 1);
    CHECK(L3.enumerate(3).size() == 27);
}

TEST_CASE("separation constant is p") {
    for (long long p : {2LL, 3LL}) {
        QuasiLattice L(FieldModel::padic(p));
        CHECK(separation(L.enumerate(p == 2 ? 3 : 2)) == Rational(p));
    }
    // explicit witness pair at distance exactly p
    long long p = 3, pn = 27;
    Vec l1 = qp(p, Rational(1, pn));
    Vec l2 = qp(p, Rational(pn / p + 1, pn));
    CHECK(*(l1 - l2).abs_exp() == 1);
}

TEST_CASE("mixed-shell distances are exactly p^m") {
    QuasiLattice L(FieldModel::padic(2));
    // lambda' in L_n, lambda'' in L_m, n < m: |l' - l''| = 2^m
    for (long long n = 1; n <= 3; ++n) {
        for (long long m = n + 1; m <= 4; ++m) {
            long long pn = 1LL << n, pm = 1LL << m;
            for (long long k1 = 1; k1 < pn; k1 += 2)
                for (long long k2 = 1; k2 < pm; k2 += 2)
                    CHECK(*(qp(2, Rational(k1, pn)) - qp(2, Rational(k2, pm))).abs_exp() == m);
        }
    }
}

TEST_CASE("partition: exactly one lattice point per unit ball") {
    for (long long p : {2LL, 3LL}) {
        QuasiLattice L(FieldModel::padic(p));
        long long n = p == 2 ? 4 : 3;
        auto pts = L.enumerate(n);
        // Window centers: canonical representatives of B(0,p^n) mod D, i.e.
        // the lattice points themselves, plus integer perturbations.
        for (const auto& c : pts) {
            CHECK(count_in_ball(pts, c, 0) == 1);
            CHECK(count_in_ball(pts, Vec(c[0] + Element::from_integer(c.model(), 7)), 0) == 1);
        }
    }
}

TEST_CASE("perturbation stability of the coset property") {
    std::mt19937_64 rng(41);
    QuasiLattice L(FieldModel::padic(2));
    auto pts = L.enumerate(3);
    std::vector<Vec> perturbed;
    for (const auto& g : pts) {
        long long k = static_cast<long long>(rng() % 16);
        perturbed.push_back(Vec(g[0] + Element::from_rational(g.model(), Rational(k, 1), 48)));
    }
    for (const auto& c : pts) CHECK(count_in_ball(perturbed, c, 0) == 1);
}

TEST_CASE("count_in_ball coset counts") {
    QuasiLattice L(FieldModel::padic(2));
    auto pts = L.enumerate(4);
    CHECK(count_in_ball(pts, qp(2, Rational(0)), 2) == 4);
    CHECK(count_in_ball(pts, qp(2, Rational(1, 2)), 0) == 1);
    std::vector<Vec> singleton{qp(2, Rational(0))};
    CHECK(count_in_ball(singleton, qp(2, Rational(4)), 3) == 1);
}

TEST_CASE("density of the truncated quasi-lattice is exactly 1") {
    for (long long p : {2LL, 3LL}) {
        QuasiLattice L(FieldModel::padic(p));
        long long m = p == 2 ? 5 : 4;
        auto pts = L.enumerate(m);
        auto window = L.enumerate(m); // centers cover B(0, p^m)
        for (long long n = 0; n <= std::min(m - 1, 4LL); ++n) {
            auto rep = density_at_scale(pts, window, n);
            CHECK(rep.sup_count == rep.inf_count);
            CHECK(rep.upper_density == Rational(1));
            CHECK(rep.lower_density == Rational(1));
        }
    }
}

TEST_CASE("scaled lattice doubles the per-ball count") {
    QuasiLattice L(FieldModel::padic(2));
    auto pts = L.enumerate(4);
    std::vector<Vec> scaled;
    for (const auto& x : pts) scaled.push_back(x.times_prime_pow(1)); // multiply by 2
    // inside B(0, 8), each ball B(x, 2^n) holds 2^{n+1} points
    auto window = L.enumerate(3);
    for (long long n = 0; n <= 2; ++n) {
        auto rep = density_at_scale(scaled, window, n);
        CHECK(rep.upper_density == Rational(2));
        CHECK(rep.lower_density == Rational(2));
    }
    std::vector<Vec> empty;
    auto rep0 = density_at_scale(empty, window, 1);
    CHECK(rep0.upper_density == Rational(0));
}

TEST_CASE("laurent quasi-lattice mirrors the construction") {
    QuasiLattice L(FieldModel::laurent(2), 1);
    auto pts = L.enumerate(3);
    CHECK(pts.size() == 8);
    CHECK(separation(pts) == Rational(2));
    for (const auto& c : pts) CHECK(count_in_ball(pts, c, 0) == 1);
}

TEST_CASE("separation rejects tiny sets") {
    CHECK_THROWS_AS(separation({qp(2, Rational(1))}), std::invalid_argument);
}
