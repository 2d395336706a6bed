#pragma once

#include <optional>
#include <vector>

#include "lfspec/spectra.hpp"

namespace lfspec {

// The iterated function system f_c(x) = p^s x + c (c in C) on Q_p with
// uniform weights; its invariant measure is SelfSimilarMeasure.
struct IfsSpec {
    long long p;
    long long s;
    std::vector<long long> digits;

    IfsSpec(long long prime, long long ratio_exp, std::vector<long long> C)
        : p(prime), s(ratio_exp), digits(std::move(C)) {
        measure(); // validates
    }

    SelfSimilarMeasure measure() const {
        return SelfSimilarMeasure(FieldModel::padic(p), s, digits);
    }
};

// Level-n cylinder representatives c_0 + p^s c_1 + ... + p^{s(n-1)} c_{n-1}
// in Z/p^{sn}Z, sorted; |C|^n distinct residues.
std::vector<long long> cylinder_set(const IfsSpec& spec, long long depth);

struct DimensionValue {
    std::optional<Rational> exact; // log|C|/log p^s when |C| is a power of p
    double value = 0.0;
};

DimensionValue dimension(const IfsSpec& spec);

// Spectrum of the depth-n truncation: search in Z/p^{sn}Z preferring
// extensions of the previous depth's spectrum (falls back to an
// unrestricted search). Entries are integers lambda; the dual points are
// lambda / p^{sn}.
std::optional<std::vector<long long>> truncated_spectrum(
    const IfsSpec& spec, long long depth,
    const std::optional<std::vector<long long>>& previous = std::nullopt,
    long long budget = 50'000'000, size_t max_cylinder = 256);

struct DepthReport {
    long long depth = 0;
    std::vector<long long> cylinder;
    HomogeneityProfile profile;
    std::optional<std::vector<long long>> spectrum;
    bool jp_complete = false;          // exact JP over all residues, depth-n truncation
    bool limit_orthogonal = false;     // pairwise orthogonality under the limit transform
    bool bessel_le_one = false;        // partial criterion sums <= 1 for the limit measure
    double min_partial_sum = 0.0;
    double max_partial_sum = 0.0;
};

// Full per-depth verification; `spectrum` defaults to truncated_spectrum.
DepthReport verify_depth(const IfsSpec& spec, long long depth,
                         const std::optional<std::vector<long long>>& spectrum = std::nullopt,
                         const std::optional<std::vector<long long>>& previous = std::nullopt);

// Depth 1..max_depth with nested spectra.
std::vector<DepthReport> analyze(const IfsSpec& spec, long long max_depth);

} // namespace lfspec
