#include <doctest.h>

#include <random>

#include "lfspec/spectra.hpp"

using namespace lfspec;

namespace {

Vec qp(long long p, const Rational& r) {
    return rational_point(FieldModel::padic(p), r, 48);
}

} // namespace

TEST_CASE("criterion sums of orthogonal systems stay in [0,1]") {
    std::mt19937_64 rng(61);
    int orthogonal_seen = 0;
    for (int it = 0; it < 40; ++it) {
        long long p = it % 2 == 0 ? 2 : 3;
        long long n = 2;
        long long pn = p == 2 ? 4 : 9;
        std::vector<long long> t;
        for (long long x = 0; x < pn; ++x)
            if (rng() % 2) t.push_back(x);
        if (t.empty()) continue;
        ResidueSet T(p, n, t);
        auto lam = find_spectrum_bruteforce(T);
        if (!lam) continue;
        // arbitrary orthogonal subfamily: a prefix of a true spectrum
        size_t keep = 1 + rng() % lam->size();
        std::vector<long long> sub(lam->begin(), lam->begin() + keep);
        auto verdict = check_jp_criterion(Measure(residue_measure(T)),
                                          CandidateSpectrum(residue_points(p, 0, sub)),
                                          all_residue_samples(p, n));
        CHECK(verdict.orthogonal);
        ++orthogonal_seen;
        for (const auto& s : verdict.sums) {
            // partial sums may be irrational algebraic reals; bound exactly
            // when rational, otherwise through the float image
            if (s.value) {
                CHECK(*s.value >= Rational(0));
                CHECK(*s.value <= Rational(1));
            } else {
                CHECK(s.approx >= -1e-12);
                CHECK(s.approx <= 1.0 + 1e-12);
            }
        }
    }
    CHECK(orthogonal_seen > 5);
}

TEST_CASE("JP completeness on all residues implies orthogonality") {
    // The proof takes xi = lambda' in the criterion; realized here as: any
    // verdict that is complete at all residues must also carry the
    // orthogonality flag.
    std::mt19937_64 rng(62);
    for (int it = 0; it < 30; ++it) {
        long long pn = 8;
        std::vector<long long> t;
        for (long long x = 0; x < pn; ++x)
            if (rng() % 2) t.push_back(x);
        if (t.empty()) continue;
        ResidueSet T(2, 3, t);
        auto lam = find_spectrum_bruteforce(T);
        if (!lam) continue;
        auto verdict = check_jp_criterion(Measure(residue_measure(T)),
                                          CandidateSpectrum(residue_points(2, 0, *lam)),
                                          all_residue_samples(2, 3));
        CHECK(verdict.complete_at_samples);
        CHECK(verdict.orthogonal);
    }
}

TEST_CASE("duplicate spectrum points are rejected") {
    CHECK_THROWS_AS(CandidateSpectrum({qp(2, Rational(1)), qp(2, Rational(1))}),
                    std::invalid_argument);
}
