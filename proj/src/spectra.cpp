#include "lfspec/spectra.hpp"

#include <algorithm>
#include <functional>

#include "lfspec/character.hpp"
#include "lfspec/eigen.hpp"

namespace lfspec {

OrthogonalityResult check_orthogonality(const Measure& mu, const CandidateSpectrum& lambda) {
    const auto& pts = lambda.points();
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (!zero_set_contains(mu, pts[i] - pts[j]))
                return {false, std::make_pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

namespace {

SpectralVerdict criterion_against_target(const std::vector<Vec>& lambda,
                                         const std::vector<Vec>& samples,
                                         const Rational& target,
                                         const std::function<FourierValue(const Vec&)>& transform,
                                         const OrthogonalityResult& orth) {
    if (samples.empty()) throw std::invalid_argument("criterion: samples must be nonempty");
    SpectralVerdict v;
    v.orthogonal = orth.orthogonal;
    v.failing_pair = orth.failing_pair;
    v.complete_at_samples = true;
    long long p = lambda.empty() ? samples[0].model().p : lambda[0].model().p;
    for (size_t si = 0; si < samples.size(); ++si) {
        CyclotomicSum acc = CyclotomicSum::zero(p);
        for (const auto& lam : lambda)
            acc += transform(lam - samples[si]).norm_sq();
        CriterionSum cs;
        cs.sample_index = si;
        cs.value = acc.as_rational();
        cs.approx = acc.to_complex().real();
        cs.matches_target = cs.value.has_value() && *cs.value == target;
        if (!cs.matches_target && v.complete_at_samples) {
            v.complete_at_samples = false;
            v.failing_sample = si;
        }
        v.sums.push_back(std::move(cs));
    }
    return v;
}

} // namespace

SpectralVerdict check_jp_criterion(const Measure& mu, const CandidateSpectrum& lambda,
                                   const std::vector<Vec>& samples) {
    auto orth = check_orthogonality(mu, lambda);
    return criterion_against_target(
        lambda.points(), samples, Rational(1),
        [&](const Vec& xi) { return mu_hat(mu, xi); }, orth);
}

SpectralVerdict check_spectral_set(const CompactOpenSet& omega, const CandidateSpectrum& lambda,
                                   const std::vector<Vec>& samples) {
    Measure mu = UniformMeasure(omega);
    auto orth = check_orthogonality(mu, lambda);
    Rational target = omega.measure() * omega.measure();
    return criterion_against_target(
        lambda.points(), samples, target,
        [&](const Vec& xi) { return ft_compact_open(omega, xi); }, orth);
}

HadamardResult is_hadamard(const std::vector<Vec>& s_points, const std::vector<Vec>& lambda) {
    if (s_points.size() != lambda.size())
        throw std::invalid_argument("is_hadamard: |S| != |Lambda|");
    if (s_points.empty()) throw std::invalid_argument("is_hadamard: empty");
    long long p = s_points[0].model().p;
    for (size_t i = 0; i < lambda.size(); ++i) {
        for (size_t k = i + 1; k < lambda.size(); ++k) {
            CyclotomicSum dot = CyclotomicSum::zero(p);
            Vec diff = lambda[i] - lambda[k];
            for (const auto& s : s_points) dot.add_phase(character(diff, s));
            if (!dot.is_zero()) return {false, std::make_pair(i, k)};
        }
    }
    return {true, std::nullopt};
}

std::pair<double, double> frame_bounds(const AtomicMeasure& mu, const std::vector<Vec>& lambda) {
    size_t n = mu.points.size();
    if (n == 0) throw std::invalid_argument("frame_bounds: empty measure");
    std::vector<std::complex<double>> gram(n * n, std::complex<double>(0.0, 0.0));
    // G[s,t] = sqrt(w_s w_t) sum_lambda chi(lambda . (x_t - x_s)), phases exact.
    for (size_t s = 0; s < n; ++s) {
        for (size_t t = 0; t < n; ++t) {
            std::complex<double> acc(0.0, 0.0);
            for (const auto& lam : lambda)
                acc += character(lam, mu.points[t] - mu.points[s]).to_complex();
            double w = std::sqrt(mu.weights[s].to_double() * mu.weights[t].to_double());
            gram[s * n + t] = w * acc;
        }
    }
    auto eig = hermitian_eigenvalues(std::move(gram), n);
    return {eig.back(), eig.front()};
}

// ---------------------------------------------------------------------------

ResidueSet::ResidueSet(long long prime, long long exponent, std::vector<long long> t)
    : p(prime), n(exponent), elems(std::move(t)) {
    if (!FieldModel::is_prime(p)) throw std::invalid_argument("ResidueSet: p must be prime");
    if (n < 1) throw std::invalid_argument("ResidueSet: need n >= 1");
    long long pn = modulus();
    std::sort(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 0 || elems[i] >= pn)
            throw std::invalid_argument("ResidueSet: element out of range");
        if (i > 0 && elems[i] == elems[i - 1])
            throw std::invalid_argument("ResidueSet: duplicate element");
    }
}

long long ResidueSet::modulus() const {
    long long pn = 1;
    for (long long i = 0; i < n; ++i) {
        pn *= p;
        if (pn > (1LL << 30)) throw std::overflow_error("ResidueSet: modulus too large");
    }
    return pn;
}

HomogeneityProfile homogeneity_profile(const ResidueSet& T) {
    if (T.elems.empty()) throw std::invalid_argument("homogeneity_profile: empty set");
    HomogeneityProfile prof;
    prof.p = T.p;
    prof.n = T.n;
    prof.homogeneous = true;
    long long pi = 1;
    for (long long i = 1; i <= T.n; ++i) {
        pi *= T.p;
        std::vector<long long> residues;
        residues.reserve(T.elems.size());
        for (long long t : T.elems) residues.push_back(t % pi);
        std::sort(residues.begin(), residues.end());
        residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
        long long card = static_cast<long long>(residues.size());
        prof.cards.push_back(card);
        long long k = 0, v = card;
        while (v % T.p == 0) { v /= T.p; ++k; }
        if (v == 1) {
            prof.exponents.push_back(k);
        } else {
            prof.exponents.push_back(-1);
            prof.homogeneous = false;
        }
    }
    return prof;
}

std::vector<char> residue_zero_set(const ResidueSet& T) {
    long long pn = T.modulus();
    long long pm1 = pn / T.p;            // p^{n-1}
    long long phi = pm1 * (T.p - 1);
    std::vector<char> zero(static_cast<size_t>(pn), 0);
    if (T.elems.empty()) return zero;
    std::vector<long long> counts(static_cast<size_t>(pn));
    std::vector<long long> red(static_cast<size_t>(phi));
    for (long long delta = 1; delta < pn; ++delta) {
        std::fill(counts.begin(), counts.end(), 0);
        for (long long t : T.elems) ++counts[static_cast<size_t>((delta * t) % pn)];
        std::copy(counts.begin(), counts.begin() + phi, red.begin());
        for (long long e = phi; e < pn; ++e) {
            long long c = counts[static_cast<size_t>(e)];
            if (c == 0) continue;
            long long base = e - phi;
            for (long long j = 0; j < T.p - 1; ++j)
                red[static_cast<size_t>(base + j * pm1)] -= c;
        }
        bool z = true;
        for (long long e = 0; e < phi; ++e)
            if (red[static_cast<size_t>(e)] != 0) { z = false; break; }
        zero[static_cast<size_t>(delta)] = z ? 1 : 0;
    }
    return zero;
}

namespace {

// Decision-problem tiling search: cover the smallest uncovered residue first.
bool tile_dfs(const std::vector<long long>& T, long long pn, std::vector<char>& covered,
              long long covered_count) {
    if (covered_count == pn) return true;
    long long r = 0;
    while (covered[static_cast<size_t>(r)]) ++r;
    for (long long t : T) {
        long long cand = ((r - t) % pn + pn) % pn;
        bool clash = false;
        for (long long u : T) {
            if (covered[static_cast<size_t>((cand + u) % pn)]) { clash = true; break; }
        }
        if (clash) continue;
        for (long long u : T) covered[static_cast<size_t>((cand + u) % pn)] = 1;
        if (tile_dfs(T, pn, covered, covered_count + static_cast<long long>(T.size())))
            return true;
        for (long long u : T) covered[static_cast<size_t>((cand + u) % pn)] = 0;
    }
    return false;
}

// Lexicographically-least complement: grow T' in ascending order; the next
// element may not exceed the largest still-available cover of the smallest
// uncovered residue.
bool tile_lex_dfs(const std::vector<long long>& T, long long pn, std::vector<char>& covered,
                  long long covered_count, std::vector<long long>& chosen) {
    if (covered_count == pn) return true;
    long long r = 0;
    while (covered[static_cast<size_t>(r)]) ++r;
    long long last = chosen.empty() ? -1 : chosen.back();
    long long cmax = -1;
    for (long long t : T) {
        long long cand = ((r - t) % pn + pn) % pn;
        if (cand > last) cmax = std::max(cmax, cand);
    }
    if (cmax < 0) return false;
    for (long long e = last + 1; e <= cmax; ++e) {
        bool clash = false;
        for (long long u : T) {
            if (covered[static_cast<size_t>((e + u) % pn)]) { clash = true; break; }
        }
        if (clash) continue;
        for (long long u : T) covered[static_cast<size_t>((e + u) % pn)] = 1;
        chosen.push_back(e);
        if (tile_lex_dfs(T, pn, covered, covered_count + static_cast<long long>(T.size()), chosen))
            return true;
        chosen.pop_back();
        for (long long u : T) covered[static_cast<size_t>((e + u) % pn)] = 0;
    }
    return false;
}

} // namespace

bool tile_exists(const ResidueSet& T) {
    long long pn = T.modulus();
    if (T.elems.empty()) return false;
    if (pn % static_cast<long long>(T.elems.size()) != 0) return false;
    std::vector<char> covered(static_cast<size_t>(pn), 0);
    return tile_dfs(T.elems, pn, covered, 0);
}

std::optional<std::vector<long long>> find_tile_complement(const ResidueSet& T) {
    long long pn = T.modulus();
    if (T.elems.empty()) return std::nullopt;
    if (pn % static_cast<long long>(T.elems.size()) != 0) return std::nullopt;
    std::vector<char> covered(static_cast<size_t>(pn), 0);
    std::vector<long long> chosen;
    if (tile_lex_dfs(T.elems, pn, covered, 0, chosen)) return chosen;
    return std::nullopt;
}

namespace {

bool spectrum_dfs(const std::vector<char>& zero, long long pn, size_t target,
                  std::vector<long long>& chosen, long long from, long long& budget) {
    if (chosen.size() == target) return true;
    for (long long c = from; c < pn; ++c) {
        if (pn - c < static_cast<long long>(target - chosen.size())) break;
        if (--budget <= 0) throw std::runtime_error("spectrum search: budget exceeded");
        bool ok = true;
        for (long long l : chosen) {
            if (!zero[static_cast<size_t>(((c - l) % pn + pn) % pn)]) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(c);
        if (spectrum_dfs(zero, pn, target, chosen, c + 1, budget)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<long long>> find_spectrum_bruteforce(const ResidueSet& T, long long budget) {
    if (T.elems.empty()) return std::nullopt;
    long long pn = T.modulus();
    if (T.elems.size() == 1) return std::vector<long long>{0};
    auto zero = residue_zero_set(T);
    std::vector<long long> chosen{0};
    if (spectrum_dfs(zero, pn, T.elems.size(), chosen, 1, budget)) return chosen;
    return std::nullopt;
}

bool spectrum_exists(const ResidueSet& T, long long budget) {
    return find_spectrum_bruteforce(T, budget).has_value();
}

TileCertificate::TileCertificate(ResidueSet T, std::vector<long long> comp)
    : tile(std::move(T)), complement(std::move(comp)) {
    long long pn = tile.modulus();
    std::vector<long long> hits(static_cast<size_t>(pn), 0);
    for (long long t : tile.elems)
        for (long long c : complement) ++hits[static_cast<size_t>((t + c) % pn)];
    for (long long h : hits)
        if (h != 1) throw std::invalid_argument("TileCertificate: T (+) T' does not tile");
}

HadamardCertificate::HadamardCertificate(ResidueSet T, std::vector<long long> lambda)
    : set(std::move(T)), spectrum(std::move(lambda)) {
    if (spectrum.size() != set.elems.size())
        throw std::invalid_argument("HadamardCertificate: size mismatch");
    auto s_points = residue_points(set.p, set.n, set.elems);
    auto l_points = residue_points(set.p, 0, spectrum);
    if (!is_hadamard(s_points, l_points).hadamard)
        throw std::invalid_argument("HadamardCertificate: matrix is not Hadamard");
}

bool residue_jp_complete(const ResidueSet& T, const std::vector<long long>& lambda) {
    if (T.elems.empty() || lambda.empty()) return false;
    long long pn = T.modulus();
    long long pm1 = pn / T.p;
    long long phi = pm1 * (T.p - 1);
    long long tsq = static_cast<long long>(T.elems.size()) * static_cast<long long>(T.elems.size());
    // difference multiset D[u] = #{(t,t') : t - t' = u}
    std::vector<long long> diff(static_cast<size_t>(pn), 0);
    for (long long t : T.elems)
        for (long long t2 : T.elems) ++diff[static_cast<size_t>(((t - t2) % pn + pn) % pn)];
    std::vector<long long> acc(static_cast<size_t>(pn));
    std::vector<long long> red(static_cast<size_t>(phi));
    for (long long xi = 0; xi < pn; ++xi) {
        std::fill(acc.begin(), acc.end(), 0);
        // |T|^2 sum_lambda |mu^|^2 = sum_lambda sum_u D[u] zeta^{(lambda-xi)u}
        for (long long l : lambda) {
            long long shift = ((l - xi) % pn + pn) % pn;
            for (long long u = 0; u < pn; ++u) {
                if (diff[static_cast<size_t>(u)] == 0) continue;
                acc[static_cast<size_t>((shift * u) % pn)] += diff[static_cast<size_t>(u)];
            }
        }
        acc[0] -= tsq; // target: the sum equals 1 exactly
        std::copy(acc.begin(), acc.begin() + phi, red.begin());
        for (long long e = phi; e < pn; ++e) {
            long long c = acc[static_cast<size_t>(e)];
            if (c == 0) continue;
            long long base = e - phi;
            for (long long j = 0; j < T.p - 1; ++j)
                red[static_cast<size_t>(base + j * pm1)] -= c;
        }
        for (long long e = 0; e < phi; ++e)
            if (red[static_cast<size_t>(e)] != 0) return false;
    }
    return true;
}

AtomicMeasure residue_measure(const ResidueSet& T) {
    return AtomicMeasure::uniform(residue_points(T.p, T.n, T.elems));
}

std::vector<Vec> residue_points(long long p, long long n, const std::vector<long long>& ks) {
    auto model = FieldModel::padic(p);
    Rational den = Rational::pow_int(p, -n);
    std::vector<Vec> out;
    out.reserve(ks.size());
    for (long long k : ks) out.push_back(rational_point(model, Rational(k) * den));
    return out;
}

std::vector<Vec> all_residue_samples(long long p, long long n) {
    long long pn = 1;
    for (long long i = 0; i < n; ++i) pn *= p;
    std::vector<long long> ks(static_cast<size_t>(pn));
    for (long long i = 0; i < pn; ++i) ks[static_cast<size_t>(i)] = i;
    return residue_points(p, n, ks);
}

} // namespace lfspec
