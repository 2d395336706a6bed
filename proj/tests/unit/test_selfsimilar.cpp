#include <doctest.h>

#include "lfspec/selfsimilar.hpp"

using namespace lfspec;

namespace {
const IfsSpec kPaper(2, 3, {0, 3, 4, 7});
}

TEST_CASE("cylinder sets") {
    CHECK(cylinder_set(kPaper, 1) == std::vector<long long>{0, 3, 4, 7});
    auto c2 = cylinder_set(kPaper, 2);
    CHECK(c2.size() == 16);
    CHECK(std::find(c2.begin(), c2.end(), 3) != c2.end());
    CHECK(std::find(c2.begin(), c2.end(), 24) != c2.end());
    CHECK(std::find(c2.begin(), c2.end(), 27) != c2.end());
    IfsSpec single(3, 1, {2});
    CHECK(cylinder_set(single, 4) == std::vector<long long>{2 + 6 + 18 + 54});
}

TEST_CASE("cylinder sets are consistent across depths") {
    for (long long n = 2; n <= 3; ++n) {
        auto cn = cylinder_set(kPaper, n);
        auto prev = cylinder_set(kPaper, n - 1);
        long long mod = 1;
        for (long long i = 0; i < 3 * (n - 1); ++i) mod *= 2;
        std::vector<long long> reduced;
        for (long long t : cn) reduced.push_back(t % mod);
        std::sort(reduced.begin(), reduced.end());
        reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
        CHECK(reduced == prev);
    }
}

TEST_CASE("dimension") {
    auto d = dimension(kPaper);
    REQUIRE(d.exact.has_value());
    CHECK(*d.exact == Rational(2, 3));
    CHECK(d.value == doctest::Approx(2.0 / 3.0));

    IfsSpec full(2, 2, {0, 1, 2, 3});
    CHECK(*dimension(full).exact == Rational(1));
    IfsSpec half(3, 2, {0, 1, 2});
    CHECK(*dimension(half).exact == Rational(1, 2));
    IfsSpec odd(2, 3, {0, 3, 5}); // |C| = 3, not a power of 2
    CHECK(!dimension(odd).exact.has_value());
}

TEST_CASE("truncated spectra: depth 1 of the {0,3,4,7} system") {
    auto l1 = truncated_spectrum(kPaper, 1);
    REQUIRE(l1.has_value());
    CHECK(*l1 == std::vector<long long>{0, 1, 4, 5});
}

TEST_CASE("depth-2 spectrum extends depth 1") {
    auto l1 = truncated_spectrum(kPaper, 1);
    auto l2 = truncated_spectrum(kPaper, 2, l1);
    REQUIRE(l2.has_value());
    CHECK(l2->size() == 16);
    // contains the embedded depth-1 spectrum {0, 8, 32, 40}
    for (long long l : {0LL, 8LL, 32LL, 40LL})
        CHECK(std::find(l2->begin(), l2->end(), l) != l2->end());
    // and is itself a verified spectrum
    ResidueSet T(2, 6, cylinder_set(kPaper, 2));
    CHECK(residue_jp_complete(T, *l2));
}

TEST_CASE("verify_depth on the {0,3,4,7} measure") {
    auto r1 = verify_depth(kPaper, 1);
    CHECK(r1.profile.homogeneous);
    REQUIRE(r1.spectrum.has_value());
    CHECK(r1.jp_complete);
    CHECK(r1.limit_orthogonal);
    CHECK(r1.bessel_le_one);
    CHECK(r1.max_partial_sum <= 1.0 + 1e-12);

    auto r2 = verify_depth(kPaper, 2, std::nullopt, r1.spectrum);
    CHECK(r2.profile.homogeneous);
    CHECK(r2.jp_complete);
    CHECK(r2.limit_orthogonal);
    CHECK(r2.bessel_le_one);
}

TEST_CASE("another IFS: C = {0,1} with ratio 4 in Q_2") {
    IfsSpec spec(2, 2, {0, 1});
    auto reports = analyze(spec, 3);
    for (const auto& r : reports) {
        CHECK(r.profile.homogeneous);
        REQUIRE(r.spectrum.has_value());
        CHECK(r.jp_complete);
        CHECK(r.limit_orthogonal);
        CHECK(r.bessel_le_one);
    }
}

TEST_CASE("residue_jp_complete agrees with the generic criterion") {
    // Spot check the integer fast path against check_jp_criterion.
    ResidueSet T(2, 3, {0, 3, 4, 7});
    std::vector<long long> good{0, 1, 4, 5};
    std::vector<long long> bad{0, 1, 2, 5};
    CHECK(residue_jp_complete(T, good));
    CHECK(!residue_jp_complete(T, bad));

    auto mu = Measure(residue_measure(T));
    auto verdict = check_jp_criterion(mu, CandidateSpectrum(residue_points(2, 0, good)),
                                      all_residue_samples(2, 3));
    CHECK(verdict.complete_at_samples);
    auto verdict2 = check_jp_criterion(mu, CandidateSpectrum(residue_points(2, 0, bad)),
                                       all_residue_samples(2, 3));
    CHECK(!verdict2.complete_at_samples);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(IfsSpec(2, 3, {0, 3, 8}), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(IfsSpec(2, 3, {0, 3, 3}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(IfsSpec(2, 0, {0, 1}), std::invalid_argument);     // no contraction
    CHECK_THROWS_AS(truncated_spectrum(kPaper, 5), std::runtime_error); // cylinder too big
}
