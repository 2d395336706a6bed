#include "lfspec/acceptance.hpp"

#include <atomic>
#include <cstring>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "lfspec/landau.hpp"
#include "lfspec/quasilattice.hpp"
#include "lfspec/selfsimilar.hpp"

namespace lfspec {

namespace {

Vec qp(long long p, const Rational& r, long long prec = 64) {
    return rational_point(FieldModel::padic(p), r, prec);
}

CompactOpenSet ball0(long long p, long long n) {
    return CompactOpenSet::single_ball(Vec(Element::zero(FieldModel::padic(p), 64)), n);
}

unsigned thread_count(const AcceptanceOptions& opt) {
    if (opt.threads > 0) return opt.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// -------------------------------------------------------------------------
// 1. Fourier identities: the ball-transform formula on a grid covering both
//    branches, and the double-integral closed form against cell summation.
CriterionResult criterion_fourier(const AcceptanceOptions&) {
    CriterionResult res{1, "fourier-identities", true, ""};
    long long checked = 0;
    for (long long p : {2LL, 3LL, 5LL}) {
        auto model = FieldModel::padic(p);
        for (long long a = -4; a <= 4; ++a) {
            for (long long e = -6; e <= 6; ++e) {
                for (long long k : {1LL, p + 1LL, 2 * p + 1}) {
                    // |xi| = p^e exactly (k is a unit)
                    Vec xi = qp(p, Rational(k) * Rational::pow_int(p, -e));
                    auto v = ft_ball_indicator(model, 1, a, xi);
                    bool inside = e <= -a;
                    bool ok = inside ? (v.as_rational() && *v.as_rational() == Rational::pow_int(p, a))
                                     : v.is_zero();
                    if (!ok) {
                        res.passed = false;
                        res.detail = "ball indicator mismatch at p=" + std::to_string(p) +
                                     " a=" + std::to_string(a) + " |xi|=p^" + std::to_string(e);
                        return res;
                    }
                    ++checked;
                }
            }
            Vec zero(Element::zero(model, 64));
            if (*ft_ball_indicator(model, 1, a, zero).as_rational() != Rational::pow_int(p, a)) {
                res.passed = false;
                res.detail = "ball indicator at xi=0";
                return res;
            }
        }
        for (long long a = -4; a <= 4; ++a) {
            for (long long b = -4; b <= 4; ++b) {
                Rational closed = double_integral_closed(p, a, b);
                Rational cells = double_integral_cells(p, a, b);
                Rational branch = a + b >= 0 ? Rational::pow_int(p, a + b)
                                             : Rational::pow_int(p, 2 * (a + b));
                if (closed != cells || closed != branch) {
                    res.passed = false;
                    res.detail = "double integral mismatch at p=" + std::to_string(p) +
                                 " a=" + std::to_string(a) + " b=" + std::to_string(b);
                    return res;
                }
                ++checked;
            }
        }
    }
    res.detail = std::to_string(checked) + " exact identities";
    return res;
}

// -------------------------------------------------------------------------
// 2. Quasi-lattice: separation p, and exactly p^n points per ball at every
//    scale 0..4 inside the truncation.
CriterionResult criterion_quasilattice(const AcceptanceOptions&) {
    CriterionResult res{2, "quasi-lattice-density", true, ""};
    for (long long p : {2LL, 3LL}) {
        QuasiLattice L(FieldModel::padic(p));
        auto pts = L.enumerate(5);
        if (separation(pts) != Rational(p)) {
            res.passed = false;
            res.detail = "separation != p for p=" + std::to_string(p);
            return res;
        }
        for (long long n = 0; n <= 4; ++n) {
            long long want = 1;
            for (long long i = 0; i < n; ++i) want *= p;
            for (const auto& c : pts) {
                if (count_in_ball(pts, c, n) != want) {
                    res.passed = false;
                    res.detail = "ball count != p^n at p=" + std::to_string(p) +
                                 " n=" + std::to_string(n);
                    return res;
                }
            }
        }
    }
    res.detail = "separation = p and density 1 at scales 0..4 for p in {2,3}";
    return res;
}

// -------------------------------------------------------------------------
// 3. Tile / spectral / homogeneous equivalence, exhaustive.
struct TriadCounts {
    std::atomic<long long> checked{0};
    std::atomic<long long> homogeneous{0};
    std::atomic<long long> discrepancies{0};
    std::mutex detail_mutex;
    std::string first_discrepancy;
};

void triad_check_one(long long p, long long n, const std::vector<long long>& elems,
                     TriadCounts& counts) {
    bool h, t, s;
    if (elems.empty()) {
        h = t = s = false;
    } else {
        ResidueSet T(p, n, elems);
        h = homogeneity_profile(T).homogeneous;
        t = tile_exists(T);
        s = spectrum_exists(T);
    }
    counts.checked.fetch_add(1, std::memory_order_relaxed);
    if (h) counts.homogeneous.fetch_add(1, std::memory_order_relaxed);
    if (h != t || t != s) {
        counts.discrepancies.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(counts.detail_mutex);
        if (counts.first_discrepancy.empty()) {
            std::ostringstream os;
            os << "p=" << p << " n=" << n << " T={";
            for (size_t i = 0; i < elems.size(); ++i) os << (i ? "," : "") << elems[i];
            os << "} homog=" << h << " tile=" << t << " spectral=" << s;
            counts.first_discrepancy = os.str();
        }
    }
}

void triad_sweep_masks(long long p, long long n, long long pn, TriadCounts& counts,
                       unsigned threads) {
    long long total = 1LL << pn;
    std::atomic<long long> next{0};
    const long long chunk = 1024;
    auto worker = [&]() {
        std::vector<long long> elems;
        for (;;) {
            long long start = next.fetch_add(chunk);
            if (start >= total) return;
            long long end = std::min(total, start + chunk);
            for (long long mask = start; mask < end; ++mask) {
                elems.clear();
                for (long long b = 0; b < pn; ++b)
                    if (mask & (1LL << b)) elems.push_back(b);
                triad_check_one(p, n, elems, counts);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

void triad_sweep_combinations(long long p, long long n, long long pn, long long card,
                              TriadCounts& counts, unsigned threads) {
    // Partition the C(pn, card) combinations by their first element.
    std::atomic<long long> next_first{0};
    auto worker = [&]() {
        for (;;) {
            long long f = next_first.fetch_add(1);
            if (f > pn - card) return;
            std::vector<long long> elems(static_cast<size_t>(card));
            elems[0] = f;
            for (long long i = 1; i < card; ++i) elems[static_cast<size_t>(i)] = f + i;
            for (;;) {
                triad_check_one(p, n, elems, counts);
                // next combination with fixed first element
                long long i = card - 1;
                while (i >= 1 && elems[static_cast<size_t>(i)] == pn - card + i) --i;
                if (i < 1) break;
                ++elems[static_cast<size_t>(i)];
                for (long long j = i + 1; j < card; ++j)
                    elems[static_cast<size_t>(j)] = elems[static_cast<size_t>(j - 1)] + 1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

CriterionResult criterion_triad(const AcceptanceOptions& opt) {
    CriterionResult res{3, "triad-equivalence", true, ""};
    unsigned threads = thread_count(opt);
    TriadCounts counts;
    triad_sweep_masks(2, 2, 4, counts, threads);
    triad_sweep_masks(2, 3, 8, counts, threads);
    triad_sweep_masks(2, 4, 16, counts, threads);
    triad_sweep_masks(3, 2, 9, counts, threads);
    triad_sweep_combinations(3, 3, 27, 3, counts, threads);
    triad_sweep_combinations(3, 3, 27, 9, counts, threads);
    if (counts.discrepancies.load() != 0) {
        res.passed = false;
        res.detail = "first discrepancy: " + counts.first_discrepancy;
        return res;
    }
    res.detail = std::to_string(counts.checked.load()) + " subsets, " +
                 std::to_string(counts.homogeneous.load()) + " homogeneous, 0 discrepancies";
    return res;
}

// -------------------------------------------------------------------------
// 4. The worked example {0,3,4,7} in Z/8Z.
CriterionResult criterion_paper_example(const AcceptanceOptions&) {
    CriterionResult res{4, "paper-example-0347", true, ""};
    ResidueSet T(2, 3, {0, 3, 4, 7});
    auto prof = homogeneity_profile(T);
    if (!(prof.cards == std::vector<long long>{2, 2, 4} && prof.homogeneous)) {
        res.passed = false;
        res.detail = "profile mismatch";
        return res;
    }
    auto comp = find_tile_complement(T);
    auto lam = find_spectrum_bruteforce(T);
    if (!comp || !lam) {
        res.passed = false;
        res.detail = "certificates missing";
        return res;
    }
    try {
        TileCertificate tc(T, *comp);      // re-verify (+)-cover exactly
        HadamardCertificate hc(T, *lam);   // re-verify H H*^t = n I exactly
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("re-verification failed: ") + e.what();
        return res;
    }
    std::ostringstream os;
    os << "tile complement {";
    for (size_t i = 0; i < comp->size(); ++i) os << (i ? "," : "") << (*comp)[i];
    os << "}, spectrum {";
    for (size_t i = 0; i < lam->size(); ++i) os << (i ? "," : "") << (*lam)[i];
    os << "}, profile (2,2,4)";
    res.detail = os.str();
    return res;
}

// -------------------------------------------------------------------------
// Generated spectral pairs for criteria 5, 8, 10.
struct GeneratedPair {
    long long p, n;
    std::vector<long long> set;
    std::vector<long long> spectrum;
};

std::vector<GeneratedPair> generated_pairs(size_t want) {
    std::mt19937_64 rng(20260808);
    std::vector<GeneratedPair> out;
    while (out.size() < want) {
        long long p = rng() % 2 == 0 ? 2 : 3;
        long long n = 1 + static_cast<long long>(rng() % (p == 2 ? 4 : 2));
        long long pn = 1;
        for (long long i = 0; i < n; ++i) pn *= p;
        std::vector<long long> t;
        for (long long x = 0; x < pn; ++x)
            if (rng() % 2 == 0) t.push_back(x);
        if (t.empty() || t.size() > 8) continue;
        ResidueSet T(p, n, t);
        auto lam = find_spectrum_bruteforce(T);
        if (!lam) continue;
        out.push_back({p, n, t, *lam});
    }
    return out;
}

// 5. Jorgensen-Pedersen: criterion sums exactly 1 at every residue, and
//    deleting one spectrum point drops some sum strictly below 1.
CriterionResult criterion_jp(const AcceptanceOptions&) {
    CriterionResult res{5, "jorgensen-pedersen", true, ""};
    auto pairs = generated_pairs(100);
    for (const auto& pr : pairs) {
        ResidueSet T(pr.p, pr.n, pr.set);
        Measure mu = residue_measure(T);
        auto lam_pts = residue_points(pr.p, 0, pr.spectrum);
        auto samples = all_residue_samples(pr.p, pr.n);
        auto verdict = check_jp_criterion(mu, CandidateSpectrum(lam_pts), samples);
        bool sums_ok = verdict.orthogonal && verdict.complete_at_samples;
        for (const auto& s : verdict.sums)
            if (!s.value || *s.value != Rational(1)) sums_ok = false;
        if (!sums_ok) {
            res.passed = false;
            res.detail = "criterion sums != 1 for a generated pair (p=" + std::to_string(pr.p) +
                         ", n=" + std::to_string(pr.n) + ")";
            return res;
        }
        // delete one point: at xi = deleted lambda the sum must drop below 1
        std::vector<Vec> rest(lam_pts.begin() + 1, lam_pts.end());
        std::vector<Vec> probe{lam_pts[0]};
        auto after = check_jp_criterion(mu, CandidateSpectrum(rest), probe);
        if (!after.sums[0].value || !(*after.sums[0].value < Rational(1))) {
            res.passed = false;
            res.detail = "deletion did not strictly reduce the criterion sum";
            return res;
        }
    }
    res.detail = std::to_string(pairs.size()) + " generated pairs, sums exactly 1, deletion strict";
    return res;
}

// -------------------------------------------------------------------------
// 6. Landau ball case: eigenvalue 1 with multiplicity q^{a+b}.
CriterionResult criterion_landau_ball(const AcceptanceOptions&) {
    CriterionResult res{6, "landau-ball-case", true, ""};
    long long cases = 0;
    for (long long q : {2LL, 3LL}) {
        for (long long a = -2; a <= 3; ++a) {
            for (long long b = -2; b <= 3; ++b) {
                if (a + b < 0 || a + b > 3) continue;
                LandauProblem prob(ball0(q, b), ball0(q, a));
                auto rep = eigen_report(prob);
                long long mult = 1;
                for (long long i = 0; i < a + b; ++i) mult *= q;
                bool ok = rep.multiplicity_of_one == mult;
                for (size_t k = static_cast<size_t>(mult); k < rep.eigenvalues.size(); ++k)
                    if (std::abs(rep.eigenvalues[k]) >= 1e-9) ok = false;
                for (long long k = 0; k < mult; ++k)
                    if (std::abs(rep.eigenvalues[static_cast<size_t>(k)] - 1.0) >= 1e-9) ok = false;
                if (ok) ok = eigenprojection_check(FieldModel::padic(q), a, b);
                if (!ok) {
                    res.passed = false;
                    res.detail = "failed at q=" + std::to_string(q) + " a=" + std::to_string(a) +
                                 " b=" + std::to_string(b);
                    return res;
                }
                ++cases;
            }
        }
    }
    res.detail = std::to_string(cases) + " (q,a,b) cases: multiplicity q^{a+b}, indicators fixed";
    return res;
}

// -------------------------------------------------------------------------
// 7. Landau property suite on a ball-union corpus.
CompactOpenSet random_union(std::mt19937_64& rng, long long p, long long scale, int count) {
    long long e = 1;
    while (Rational::pow_int(p, e).num() <= 2 * count) ++e;
    std::vector<Ball> balls;
    std::vector<long long> used;
    while (static_cast<int>(balls.size()) < count) {
        long long j = static_cast<long long>(rng() % (2 * static_cast<unsigned long long>(count)));
        if (std::find(used.begin(), used.end(), j) != used.end()) continue;
        used.push_back(j);
        balls.emplace_back(qp(p, Rational(j) * Rational::pow_int(p, -(scale + e))), scale);
    }
    return CompactOpenSet(scale, balls);
}

CriterionResult criterion_landau_properties(const AcceptanceOptions&) {
    CriterionResult res{7, "landau-property-suite", true, ""};
    std::mt19937_64 rng(424242);
    int done = 0;
    for (int it = 0; it < 20; ++it) {
        long long p = it % 2 == 0 ? 2 : 3;
        long long b = static_cast<long long>(rng() % 2) - 1;      // -1..0
        long long a = -b + static_cast<long long>(rng() % 2);     // a+b in {0,1}
        int nomega = 1 + static_cast<int>(rng() % 2);
        int ndelta = 1 + static_cast<int>(rng() % 2);
        CompactOpenSet omega = random_union(rng, p, b, nomega);
        CompactOpenSet delta = random_union(rng, p, a, ndelta);
        LandauProblem prob(omega, delta);

        // partition of delta: by balls when possible, else split one ball
        CompactOpenSet delta1 = delta, delta2 = delta;
        if (delta.ball_count() >= 2) {
            delta1 = CompactOpenSet(a, {delta.balls()[0]});
            std::vector<Ball> rest(delta.balls().begin() + 1, delta.balls().end());
            delta2 = CompactOpenSet(a, rest);
        } else {
            auto children = delta.cell_centers(1 - a);
            std::vector<Ball> first, rest;
            for (size_t i = 0; i < children.size(); ++i)
                (i == 0 ? first : rest).emplace_back(children[i], a - 1);
            delta1 = CompactOpenSet(a - 1, first);
            delta2 = CompactOpenSet(a - 1, rest);
        }
        LandauTransforms tr{
            qp(p, Rational(1 + static_cast<long long>(rng() % 8))),
            qp(p, Rational(static_cast<long long>(rng() % 8), p)),
            Element::from_rational(FieldModel::padic(p),
                                   Rational(1 + static_cast<long long>(rng() % (p - 1 + 1)))
                                       * Rational::pow_int(p, static_cast<long long>(rng() % 3) - 1),
                                   64),
            delta1, delta2,
        };
        auto props = verify_properties(prob, tr);
        if (!props.all()) {
            res.passed = false;
            std::ostringstream os;
            os << "property failure at iteration " << it << " (a=" << props.translation
               << " b=" << props.scaling << " c=" << props.symmetry << " d=" << props.monotonicity
               << " e=" << props.trace_identity << " f=" << props.frobenius_identity
               << " g=" << props.superadditivity << ")";
            res.detail = os.str();
            return res;
        }
        // {0,1} dichotomy (a+b >= 0 by construction)
        auto rep = eigen_report(prob);
        Rational mass = omega.measure() * delta.measure();
        if (Rational(rep.multiplicity_of_one) != mass) {
            res.passed = false;
            res.detail = "dichotomy: count of ones != m(Omega) m(Delta)";
            return res;
        }
        for (double l : rep.eigenvalues) {
            if (std::abs(l) >= 1e-9 && std::abs(l - 1.0) >= 1e-9) {
                res.passed = false;
                res.detail = "dichotomy: eigenvalue away from {0,1}";
                return res;
            }
        }
        ++done;
    }
    res.detail = std::to_string(done) + " ball-union problems: (a)-(g) and the {0,1} dichotomy";
    return res;
}

// -------------------------------------------------------------------------
// 8. Perturbation exactness: sub-unit shifts leave every character value
//    on the unit ball unchanged.
CriterionResult criterion_perturbation(const AcceptanceOptions&) {
    CriterionResult res{8, "perturbation-exactness", true, ""};
    std::mt19937_64 rng(877);
    for (int it = 0; it < 1000; ++it) {
        long long p = std::vector<long long>{2, 3, 5}[rng() % 3];
        long long pd = 1 + static_cast<long long>(rng() % 4);
        long long denom = 1;
        for (long long i = 0; i < pd; ++i) denom *= p;
        Rational lambda(static_cast<long long>(rng() % 400) - 200, denom);
        long long eta_i = static_cast<long long>(rng() % 1000) - 500; // |eta| <= 1
        long long x_i = static_cast<long long>(rng() % 1000) - 500;   // x in D
        Vec lam = qp(p, lambda), eta = qp(p, Rational(eta_i)), x = qp(p, Rational(x_i));
        if (character(lam + eta, x) != character(lam, x)) {
            res.passed = false;
            res.detail = "phase differs under |eta| <= 1 perturbation";
            return res;
        }
    }
    // frame bounds bit-identical under perturbation of Lambda; the measure
    // must live in the unit ball, so use integer atoms T with dual points
    // lambda / p^n.
    auto pairs = generated_pairs(5);
    for (const auto& pr : pairs) {
        auto mu = AtomicMeasure::uniform(residue_points(pr.p, 0, pr.set));
        auto lam = residue_points(pr.p, pr.n, pr.spectrum);
        auto base = frame_bounds(mu, lam);
        std::vector<Vec> shifted;
        for (size_t i = 0; i < lam.size(); ++i) {
            long long k = static_cast<long long>(rng() % 64) - 32; // |eta| <= 1
            shifted.push_back(lam[i] + qp(pr.p, Rational(k)));
        }
        auto moved = frame_bounds(mu, shifted);
        if (std::memcmp(&base.first, &moved.first, sizeof(double)) != 0 ||
            std::memcmp(&base.second, &moved.second, sizeof(double)) != 0) {
            res.passed = false;
            res.detail = "frame bounds not bit-identical under integer perturbation";
            return res;
        }
    }
    res.detail = "1000 exact phase equalities; frame bounds bit-identical";
    return res;
}

// -------------------------------------------------------------------------
// 9. The Addendum's self-similar measure.
CriterionResult criterion_selfsimilar(const AcceptanceOptions&) {
    CriterionResult res{9, "self-similar-measure", true, ""};
    IfsSpec spec(2, 3, {0, 3, 4, 7});
    auto dim = dimension(spec);
    if (!dim.exact || *dim.exact != Rational(2, 3)) {
        res.passed = false;
        res.detail = "dimension != 2/3";
        return res;
    }
    auto reports = analyze(spec, 3);
    for (const auto& r : reports) {
        if (!r.profile.homogeneous || !r.spectrum || !r.jp_complete || !r.limit_orthogonal ||
            !r.bessel_le_one) {
            res.passed = false;
            res.detail = "depth " + std::to_string(r.depth) + " verification failed";
            return res;
        }
    }
    std::ostringstream os;
    os << "dimension 2/3 exact; depths 1..3 homogeneous, spectra of sizes";
    for (const auto& r : reports) os << " " << r.spectrum->size();
    os << ", JP exact, limit-orthogonal, Bessel <= 1";
    res.detail = os.str();
    return res;
}

// -------------------------------------------------------------------------
// 10. Frame bounds for the generated spectral pairs.
CriterionResult criterion_frame_bounds(const AcceptanceOptions&) {
    CriterionResult res{10, "frame-bounds", true, ""};
    auto pairs = generated_pairs(100);
    for (const auto& pr : pairs) {
        ResidueSet T(pr.p, pr.n, pr.set);
        auto mu = residue_measure(T);
        auto lam = residue_points(pr.p, 0, pr.spectrum);
        auto [a, b] = frame_bounds(mu, lam);
        if (std::abs(a - 1.0) > 1e-10 || std::abs(b - 1.0) > 1e-10) {
            res.passed = false;
            res.detail = "A=B=1 violated (A=" + std::to_string(a) + " B=" + std::to_string(b) + ")";
            return res;
        }
        std::vector<Vec> doubled = lam;
        doubled.insert(doubled.end(), lam.begin(), lam.end());
        auto [a2, b2] = frame_bounds(mu, doubled);
        if (std::abs(a2 - 2.0) > 1e-10 || std::abs(b2 - 2.0) > 1e-10) {
            res.passed = false;
            res.detail = "duplicated spectrum A=B=2 violated";
            return res;
        }
    }
    res.detail = "A = B = 1 (and 2 duplicated) within 1e-10 for 100 pairs";
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& log) {
    using Runner = CriterionResult (*)(const AcceptanceOptions&);
    const Runner runners[] = {
        criterion_fourier,        criterion_quasilattice,      criterion_triad,
        criterion_paper_example,  criterion_jp,                criterion_landau_ball,
        criterion_landau_properties, criterion_perturbation,   criterion_selfsimilar,
        criterion_frame_bounds,
    };
    std::vector<CriterionResult> out;
    for (int i = 0; i < 10; ++i) {
        if (!opt.criteria.empty() &&
            std::find(opt.criteria.begin(), opt.criteria.end(), i + 1) == opt.criteria.end())
            continue;
        CriterionResult r;
        try {
            r = runners[i](opt);
        } catch (const std::exception& e) {
            r.id = i + 1;
            r.name = "criterion-" + std::to_string(i + 1);
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        log << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": " << r.detail
            << "\n";
        log.flush();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace lfspec
