#include <doctest.h>

#include <random>

#include "lfspec/spectra.hpp"

using namespace lfspec;

namespace {

// Exhaustive oracles over all subsets of Z/p^nZ (p^n <= 16).

bool is_complement(long long pn, const std::vector<long long>& T,
                   const std::vector<long long>& C) {
    std::vector<int> hits(static_cast<size_t>(pn), 0);
    for (long long t : T)
        for (long long c : C) ++hits[static_cast<size_t>((t + c) % pn)];
    for (int h : hits)
        if (h != 1) return false;
    return true;
}

std::optional<std::vector<long long>> least_complement_oracle(const ResidueSet& T) {
    long long pn = T.modulus();
    std::optional<std::vector<long long>> best;
    for (long long mask = 0; mask < (1LL << pn); ++mask) {
        std::vector<long long> C;
        for (long long b = 0; b < pn; ++b)
            if (mask & (1LL << b)) C.push_back(b);
        if (C.empty() || !is_complement(pn, T.elems, C)) continue;
        if (!best || C < *best) best = C;
    }
    return best;
}

std::optional<std::vector<long long>> least_spectrum_oracle(const ResidueSet& T) {
    long long pn = T.modulus();
    auto zero = residue_zero_set(T);
    size_t want = T.elems.size();
    std::optional<std::vector<long long>> best;
    for (long long mask = 1; mask < (1LL << pn); mask += 2) { // must contain 0
        std::vector<long long> L;
        for (long long b = 0; b < pn; ++b)
            if (mask & (1LL << b)) L.push_back(b);
        if (L.size() != want) continue;
        bool ok = true;
        for (size_t i = 0; i < L.size() && ok; ++i)
            for (size_t j = i + 1; j < L.size(); ++j)
                if (!zero[static_cast<size_t>(L[j] - L[i])]) { ok = false; break; }
        if (!ok) continue;
        if (!best || L < *best) best = L;
    }
    return best;
}

} // namespace

TEST_CASE("tile complement search returns the lexicographically least certificate") {
    for (auto [p, n] : std::vector<std::pair<long long, long long>>{{2, 2}, {2, 3}, {3, 2}}) {
        long long pn = 1;
        for (long long i = 0; i < n; ++i) pn *= p;
        for (long long mask = 1; mask < (1LL << pn); ++mask) {
            std::vector<long long> elems;
            for (long long b = 0; b < pn; ++b)
                if (mask & (1LL << b)) elems.push_back(b);
            ResidueSet T(p, n, elems);
            auto got = find_tile_complement(T);
            auto want = least_complement_oracle(T);
            CHECK(got == want);
        }
    }
}

TEST_CASE("spectrum search returns the lexicographically least spectrum containing 0") {
    for (auto [p, n] : std::vector<std::pair<long long, long long>>{{2, 3}, {3, 2}}) {
        long long pn = 1;
        for (long long i = 0; i < n; ++i) pn *= p;
        for (long long mask = 1; mask < (1LL << pn); ++mask) {
            std::vector<long long> elems;
            for (long long b = 0; b < pn; ++b)
                if (mask & (1LL << b)) elems.push_back(b);
            ResidueSet T(p, n, elems);
            auto got = find_spectrum_bruteforce(T);
            auto want = least_spectrum_oracle(T);
            CHECK(got == want);
        }
    }
}

TEST_CASE("integer zero-set path agrees with the cyclotomic-sum route") {
    std::mt19937_64 rng(303);
    for (int it = 0; it < 60; ++it) {
        long long p = std::vector<long long>{2, 3, 5}[rng() % 3];
        long long n = p == 2 ? 3 : (p == 3 ? 3 : 2);
        long long pn = 1;
        for (long long i = 0; i < n; ++i) pn *= p;
        std::vector<long long> t;
        for (long long x = 0; x < pn; ++x)
            if (rng() % 3 == 0) t.push_back(x);
        if (t.empty()) { --it; continue; }
        ResidueSet T(p, n, t);
        auto fast = residue_zero_set(T);
        for (long long delta = 0; delta < pn; ++delta) {
            CyclotomicSum s(p, n);
            for (long long tt : t) s.add_term(delta * tt, Rational(1));
            bool slow = delta != 0 && s.is_zero();
            CHECK(static_cast<bool>(fast[static_cast<size_t>(delta)]) == slow);
        }
    }
}

TEST_CASE("search budget is honored") {
    // a generous set with a tiny budget must throw, not stall
    ResidueSet T(2, 4, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(find_spectrum_bruteforce(T, 3), std::runtime_error);
}
