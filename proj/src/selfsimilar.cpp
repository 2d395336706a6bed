#include "lfspec/selfsimilar.hpp"

#include <algorithm>
#include <cmath>

namespace lfspec {

std::vector<long long> cylinder_set(const IfsSpec& spec, long long depth) {
    if (depth < 1) throw std::invalid_argument("cylinder_set: depth >= 1");
    SelfSimilarMeasure mu = spec.measure();
    long long ps = mu.modulus();
    std::vector<long long> out{0};
    long long scale = 1;
    for (long long level = 0; level < depth; ++level) {
        std::vector<long long> next;
        next.reserve(out.size() * spec.digits.size());
        for (long long base : out)
            for (long long c : spec.digits) next.push_back(base + scale * c);
        out = std::move(next);
        scale *= ps;
    }
    std::sort(out.begin(), out.end());
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw std::invalid_argument("cylinder_set: digit collision");
    return out;
}

DimensionValue dimension(const IfsSpec& spec) {
    DimensionValue d;
    long long count = static_cast<long long>(spec.digits.size());
    d.value = std::log(static_cast<double>(count)) /
              (static_cast<double>(spec.s) * std::log(static_cast<double>(spec.p)));
    long long e = 0, v = count;
    while (v % spec.p == 0) { v /= spec.p; ++e; }
    if (v == 1) d.exact = Rational(e, spec.s);
    return d;
}

namespace {

bool seeded_spectrum_dfs(const std::vector<char>& zero, long long pn, size_t target,
                         std::vector<long long>& chosen, long long from, long long& budget) {
    if (chosen.size() == target) return true;
    for (long long c = from; c < pn; ++c) {
        if (pn - c < static_cast<long long>(target - chosen.size())) break;
        if (--budget <= 0) throw std::runtime_error("spectrum search: budget exceeded");
        bool ok = true;
        for (long long l : chosen) {
            if (l == c) { ok = false; break; }
            if (!zero[static_cast<size_t>(((c - l) % pn + pn) % pn)]) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(c);
        if (seeded_spectrum_dfs(zero, pn, target, chosen, c + 1, budget)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<long long>> truncated_spectrum(
    const IfsSpec& spec, long long depth, const std::optional<std::vector<long long>>& previous,
    long long budget, size_t max_cylinder) {
    auto cyl = cylinder_set(spec, depth);
    if (cyl.size() > max_cylinder)
        throw std::runtime_error("truncated_spectrum: cylinder exceeds the search budget");
    ResidueSet T(spec.p, spec.s * depth, cyl);
    long long pn = T.modulus();

    if (previous && !previous->empty()) {
        // Extension preference: the depth-(n-1) dual points lambda/p^{s(n-1)}
        // embed as (p^s lambda)/p^{sn}.
        long long ps = spec.measure().modulus();
        std::vector<long long> seed;
        seed.reserve(previous->size());
        for (long long l : *previous) seed.push_back(l * ps % pn);
        std::sort(seed.begin(), seed.end());
        auto zero = residue_zero_set(T);
        bool compatible = true;
        for (size_t i = 0; i < seed.size() && compatible; ++i)
            for (size_t j = i + 1; j < seed.size(); ++j)
                if (!zero[static_cast<size_t>(((seed[j] - seed[i]) % pn + pn) % pn)]) {
                    compatible = false;
                    break;
                }
        if (compatible && std::find(seed.begin(), seed.end(), 0) != seed.end()) {
            std::vector<long long> chosen = seed;
            long long b = budget;
            if (seeded_spectrum_dfs(zero, pn, cyl.size(), chosen, 1, b)) {
                std::sort(chosen.begin(), chosen.end());
                return chosen;
            }
        }
    }
    return find_spectrum_bruteforce(T, budget);
}

DepthReport verify_depth(const IfsSpec& spec, long long depth,
                         const std::optional<std::vector<long long>>& spectrum,
                         const std::optional<std::vector<long long>>& previous) {
    DepthReport rep;
    rep.depth = depth;
    rep.cylinder = cylinder_set(spec, depth);
    ResidueSet T(spec.p, spec.s * depth, rep.cylinder);
    rep.profile = homogeneity_profile(T);
    rep.spectrum = spectrum ? spectrum : truncated_spectrum(spec, depth, previous);
    if (!rep.spectrum) return rep;
    const auto& lambda = *rep.spectrum;
    long long pn = T.modulus();

    // Exact JP criterion for the truncated measure over all residues.
    rep.jp_complete = residue_jp_complete(T, lambda);

    // Orthogonality of the dual points under the exact limit transform.
    SelfSimilarMeasure mu = spec.measure();
    Measure limit = mu;
    auto points = residue_points(spec.p, spec.s * depth, lambda);
    rep.limit_orthogonal = check_orthogonality(limit, CandidateSpectrum(points)).orthogonal;

    // Bessel bound for the limit measure: sum_lambda |mu^((lambda-j)/p^{sn})|^2
    // <= 1 at every residue j. Values |mu^(delta/p^{sn})|^2 depend only on
    // delta mod p^{sn} (the attractor sits in the ring of integers).
    std::vector<CyclotomicSum> norms;
    norms.reserve(static_cast<size_t>(pn));
    Rational den = Rational::pow_int(spec.p, -(spec.s * depth));
    for (long long d = 0; d < pn; ++d) {
        Vec xi = rational_point(FieldModel::padic(spec.p), Rational(d) * den);
        norms.push_back(ft_selfsimilar(mu, xi).norm_sq());
    }
    rep.bessel_le_one = true;
    rep.min_partial_sum = 2.0;
    rep.max_partial_sum = -1.0;
    for (long long j = 0; j < pn; ++j) {
        CyclotomicSum acc = CyclotomicSum::zero(spec.p);
        for (long long l : lambda)
            acc += norms[static_cast<size_t>(((l - j) % pn + pn) % pn)];
        double val;
        auto r = acc.as_rational();
        if (r) {
            val = r->to_double();
            if (*r > Rational(1)) rep.bessel_le_one = false;
        } else {
            val = acc.to_complex().real();
            if (val > 1.0 + 1e-9) rep.bessel_le_one = false;
        }
        rep.min_partial_sum = std::min(rep.min_partial_sum, val);
        rep.max_partial_sum = std::max(rep.max_partial_sum, val);
    }
    return rep;
}

std::vector<DepthReport> analyze(const IfsSpec& spec, long long max_depth) {
    std::vector<DepthReport> out;
    std::optional<std::vector<long long>> prev;
    for (long long d = 1; d <= max_depth; ++d) {
        out.push_back(verify_depth(spec, d, std::nullopt, prev));
        prev = out.back().spectrum;
    }
    return out;
}

} // namespace lfspec
