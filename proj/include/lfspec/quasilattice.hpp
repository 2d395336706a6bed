#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lfspec/geometry.hpp"

namespace lfspec {

// The standard quasi-lattice: a complete set of representatives of
// K^d / B(0,1). For Q_p and d = 1 it is {0} u p^{-1}V_1 u p^{-2}V_2 u ...
// with V_m the units of Z/p^mZ; the Laurent analogue takes polynomials in
// T^{-1} with zero constant term. Infinite sets are only ever handled as
// truncations L n B(0, p^n).
struct QuasiLattice {
    FieldModel model;
    size_t dimension = 1;

    QuasiLattice(FieldModel m, size_t d = 1) : model(m), dimension(d) {
        if (d == 0) throw std::invalid_argument("QuasiLattice: dimension 0");
    }

    // L n B(0, p^n): exactly p^{dn} points, deterministic order
    // ({0}, then shell m = 1..n with the unit index ascending).
    std::vector<Vec> enumerate(long long n) const {
        if (n < 0) throw std::invalid_argument("QuasiLattice::enumerate: n < 0");
        std::vector<Element> line = enumerate_line(n);
        if (dimension == 1) {
            std::vector<Vec> out;
            out.reserve(line.size());
            for (auto& e : line) out.push_back(Vec(std::move(e)));
            return out;
        }
        // Cartesian power, first coordinate slowest.
        std::vector<Vec> out;
        size_t total = 1;
        for (size_t j = 0; j < dimension; ++j) total *= line.size();
        out.reserve(total);
        std::vector<size_t> idx(dimension, 0);
        for (size_t c = 0; c < total; ++c) {
            std::vector<Element> comps;
            comps.reserve(dimension);
            for (size_t j = 0; j < dimension; ++j) comps.push_back(line[idx[j]]);
            out.push_back(Vec(std::move(comps)));
            for (size_t j = dimension; j-- > 0;) {
                if (++idx[j] < line.size()) break;
                idx[j] = 0;
            }
        }
        return out;
    }

private:
    std::vector<Element> enumerate_line(long long n) const {
        std::vector<Element> out;
        out.push_back(Element::zero(model));
        for (long long m = 1; m <= n; ++m) {
            long long pm = 1;
            for (long long i = 0; i < m; ++i) pm *= model.p;
            for (long long k = 1; k < pm; ++k) {
                if (k % model.p == 0) continue;
                // Digits of k at indices -m..-1 (leading digit k mod p != 0).
                out.push_back(canonical_rep(model, k, -m, m));
            }
        }
        return out;
    }
};

// Exact |x - y| as p^e; distinct exact points always resolve within their
// windows at desk scale, and a genuinely undecidable comparison throws.
inline std::optional<long long> distance_exp(const Vec& x, const Vec& y) {
    return (x - y).abs_exp();
}

// min over distinct pairs of |sigma - tau|, exact.
inline Rational separation(const std::vector<Vec>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("separation: need at least 2 points");
    std::optional<long long> best;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            auto e = distance_exp(pts[i], pts[j]);
            if (!e) throw precision_error("separation: coincident or unresolved points");
            if (!best || *e < *best) best = e;
        }
    }
    return Rational::pow_int(pts[0].model().p, *best);
}

inline long long count_in_ball(const std::vector<Vec>& pts, const Vec& center, long long n) {
    Ball b(center, n);
    long long c = 0;
    for (const auto& s : pts)
        if (b.contains(s)) ++c;
    return c;
}

// Counting profile at one scale over an explicit window of ball centers.
struct DensityReport {
    long long scale = 0;
    long long sup_count = 0;
    long long inf_count = 0;
    Rational upper_density; // sup_count / p^{dn}
    Rational lower_density;
};

inline DensityReport density_at_scale(const std::vector<Vec>& pts,
                                      const std::vector<Vec>& window_centers, long long n) {
    if (window_centers.empty())
        throw std::invalid_argument("density_at_scale: empty window");
    DensityReport r;
    r.scale = n;
    long long sup = 0, inf = -1;
    for (const auto& c : window_centers) {
        long long cnt = count_in_ball(pts, c, n);
        sup = std::max(sup, cnt);
        inf = inf < 0 ? cnt : std::min(inf, cnt);
    }
    r.sup_count = sup;
    r.inf_count = inf;
    long long d = static_cast<long long>(window_centers[0].dim());
    Rational cell = Rational::pow_int(window_centers[0].model().p, d * n);
    r.upper_density = Rational(sup) / cell;
    r.lower_density = Rational(inf) / cell;
    return r;
}

inline std::vector<DensityReport> density_profile(const std::vector<Vec>& pts,
                                                  const std::vector<Vec>& window_centers,
                                                  long long scale_lo, long long scale_hi) {
    std::vector<DensityReport> out;
    for (long long n = scale_lo; n <= scale_hi; ++n)
        out.push_back(density_at_scale(pts, window_centers, n));
    return out;
}

} // namespace lfspec
