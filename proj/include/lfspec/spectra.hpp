#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lfspec/fourier.hpp"

namespace lfspec {

// Candidate spectrum: finitely many pairwise distinct dual points.
class CandidateSpectrum {
public:
    explicit CandidateSpectrum(std::vector<Vec> pts) : points_(std::move(pts)) {
        for (size_t i = 0; i < points_.size(); ++i)
            for (size_t j = i + 1; j < points_.size(); ++j) {
                auto d = (points_[i] - points_[j]).abs_exp();
                if (!d) throw std::invalid_argument("CandidateSpectrum: duplicate points");
            }
    }
    const std::vector<Vec>& points() const { return points_; }
    size_t size() const { return points_.size(); }

private:
    std::vector<Vec> points_;
};

struct CriterionSum {
    size_t sample_index = 0;
    std::optional<Rational> value; // exact when the sum reduces to a rational
    double approx = 0.0;
    bool matches_target = false;
};

struct SpectralVerdict {
    bool orthogonal = false;
    std::optional<std::pair<size_t, size_t>> failing_pair;
    std::vector<CriterionSum> sums;
    bool complete_at_samples = false;
    std::optional<size_t> failing_sample;
};

struct OrthogonalityResult {
    bool orthogonal = false;
    std::optional<std::pair<size_t, size_t>> failing_pair;
};

// (Lambda - Lambda) \ {0} inside the zero set of mu^, decided exactly.
OrthogonalityResult check_orthogonality(const Measure& mu, const CandidateSpectrum& lambda);

// sum_lambda |mu^(lambda - xi)|^2 == 1 at each sample, exact rationals.
SpectralVerdict check_jp_criterion(const Measure& mu, const CandidateSpectrum& lambda,
                                   const std::vector<Vec>& samples);

// Unnormalized variant for spectral sets: sums compared to m(Omega)^2.
SpectralVerdict check_spectral_set(const CompactOpenSet& omega, const CandidateSpectrum& lambda,
                                   const std::vector<Vec>& samples);

struct HadamardResult {
    bool hadamard = false;
    std::optional<std::pair<size_t, size_t>> failing_rows;
};

// (chi(lambda . s)) is a complex Hadamard matrix: H H*^t = n I, exact.
HadamardResult is_hadamard(const std::vector<Vec>& s_points, const std::vector<Vec>& lambda);

// Lower and upper frame bounds of {chi_lambda} in L^2(mu): extreme
// eigenvalues of the Gram matrix G = sum_lambda v v* with
// v[s] = sqrt(w_s) conj(chi(lambda . s)).
std::pair<double, double> frame_bounds(const AtomicMeasure& mu, const std::vector<Vec>& lambda);

// ---------------------------------------------------------------------------
// Finite cyclic setting Z/p^nZ: the tile / spectral / homogeneous triad.

// Subset of Z/p^nZ, validated: sorted, distinct, in range.
struct ResidueSet {
    long long p = 2;
    long long n = 1;
    std::vector<long long> elems;

    ResidueSet(long long prime, long long exponent, std::vector<long long> t);
    long long modulus() const;
};

struct HomogeneityProfile {
    long long p = 2;
    long long n = 1;
    std::vector<long long> cards;     // Card(T mod p^i), i = 1..n
    std::vector<long long> exponents; // k_i with card = p^{k_i}, or -1
    bool homogeneous = false;
};

// Card(T mod p^i) for i = 1..n; homogeneous iff every level (including
// i = n, i.e. |T| itself) is a power of p.
HomogeneityProfile homogeneity_profile(const ResidueSet& T);

// delta != 0 with sum_{t in T} zeta_{p^n}^{delta t} = 0, exact. Indexed by
// delta = 0..p^n-1 (entry 0 is always false).
std::vector<char> residue_zero_set(const ResidueSet& T);

// Exact-cover search for T' with T (+) T' = Z/p^nZ. find_tile_complement
// returns the lexicographically least certificate; tile_exists answers the
// decision problem with a faster cover-driven order.
bool tile_exists(const ResidueSet& T);
std::optional<std::vector<long long>> find_tile_complement(const ResidueSet& T);

// Search for Lambda of size |T| with 0 in Lambda and all pairwise
// differences in the zero set (lexicographically least / decision variant).
// budget caps visited search nodes; exceeding it throws std::runtime_error.
bool spectrum_exists(const ResidueSet& T, long long budget = 50'000'000);
std::optional<std::vector<long long>> find_spectrum_bruteforce(const ResidueSet& T,
                                                               long long budget = 50'000'000);

// Re-verified certificates (reconstruction throws if verification fails).
struct TileCertificate {
    ResidueSet tile;
    std::vector<long long> complement;
    TileCertificate(ResidueSet T, std::vector<long long> comp);
};

struct HadamardCertificate {
    ResidueSet set;
    std::vector<long long> spectrum;
    HadamardCertificate(ResidueSet T, std::vector<long long> lambda);
};

// Exact JP check specialized to Z/p^nZ: for the uniform measure on the
// atoms of T and every residue sample xi = j/p^n, decide
// sum_lambda |mu^((lambda - j)/p^n)|^2 == 1 by integer cyclotomic
// reduction. Agrees with check_jp_criterion and is fast enough for the
// exhaustive suites.
bool residue_jp_complete(const ResidueSet& T, const std::vector<long long>& lambda);

// The uniform measure on T/p^n as atoms of Q_p, and residues j/p^n as dual
// sample points (the "all residues" sample making JP checks a full proof).
AtomicMeasure residue_measure(const ResidueSet& T);
std::vector<Vec> residue_points(long long p, long long n, const std::vector<long long>& ks);
std::vector<Vec> all_residue_samples(long long p, long long n);

} // namespace lfspec
