#pragma once

#include <variant>
#include <vector>

#include "lfspec/cyclotomic.hpp"
#include "lfspec/geometry.hpp"

namespace lfspec {

// Finitely supported probability measure sum w_s delta_s.
struct AtomicMeasure {
    std::vector<Vec> points;
    std::vector<Rational> weights;

    AtomicMeasure(std::vector<Vec> pts, std::vector<Rational> w)
        : points(std::move(pts)), weights(std::move(w)) {
        validate();
    }

    static AtomicMeasure uniform(std::vector<Vec> pts) {
        std::vector<Rational> w(pts.size(), Rational(1, static_cast<long long>(pts.size())));
        return AtomicMeasure(std::move(pts), std::move(w));
    }

    void validate() const {
        if (points.empty() || points.size() != weights.size())
            throw std::invalid_argument("AtomicMeasure: points/weights mismatch");
        Rational total(0);
        for (const auto& w : weights) {
            if (w <= Rational(0)) throw std::invalid_argument("AtomicMeasure: weights must be positive");
            total += w;
        }
        if (!total.is_one()) throw std::invalid_argument("AtomicMeasure: weights must sum to 1");
        for (const auto& p : points)
            if (p.model() != points[0].model() || p.dim() != points[0].dim())
                throw std::invalid_argument("AtomicMeasure: mixed models/dimensions");
    }
};

// Normalized Haar restriction m|_O / m(O).
struct UniformMeasure {
    CompactOpenSet set;
    explicit UniformMeasure(CompactOpenSet s) : set(std::move(s)) {}
};

// Invariant measure of the IFS f_c(x) = p^s x + c (c in C), uniform weights.
// The attractor lies in the ring of integers since C does.
struct SelfSimilarMeasure {
    FieldModel model;
    long long ratio_exp; // s >= 1: contraction ratio |p^s| = p^{-s}
    std::vector<long long> digits;

    SelfSimilarMeasure(FieldModel m, long long s, std::vector<long long> C)
        : model(m), ratio_exp(s), digits(std::move(C)) {
        if (model.kind != FieldKind::PAdic)
            throw std::invalid_argument("SelfSimilarMeasure: PAdic only");
        if (ratio_exp < 1) throw std::invalid_argument("SelfSimilarMeasure: need s >= 1");
        if (digits.empty()) throw std::invalid_argument("SelfSimilarMeasure: empty digit set");
        long long ps = 1;
        for (long long i = 0; i < ratio_exp; ++i) ps *= model.p;
        for (size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] < 0 || digits[i] >= ps)
                throw std::invalid_argument("SelfSimilarMeasure: digit out of [0, p^s)");
            for (size_t j = i + 1; j < digits.size(); ++j)
                if (digits[i] == digits[j])
                    throw std::invalid_argument("SelfSimilarMeasure: duplicate digit");
        }
    }

    long long modulus() const {
        long long ps = 1;
        for (long long i = 0; i < ratio_exp; ++i) ps *= model.p;
        return ps;
    }
};

using Measure = std::variant<AtomicMeasure, UniformMeasure, SelfSimilarMeasure>;

inline const FieldModel& measure_model(const Measure& mu) {
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) return a->points[0].model();
    if (const auto* u = std::get_if<UniformMeasure>(&mu)) return u->set.model();
    return std::get<SelfSimilarMeasure>(mu).model;
}

// Exact value scalar * phase_sum of a Fourier transform.
struct FourierValue {
    Rational scalar;
    CyclotomicSum phases;

    FourierValue() : scalar(0), phases() {}
    FourierValue(Rational s, CyclotomicSum ph) : scalar(std::move(s)), phases(std::move(ph)) {}

    static FourierValue zero(long long p) { return FourierValue(Rational(0), CyclotomicSum::zero(p)); }

    static FourierValue rational(long long p, const Rational& r) {
        return FourierValue(r, CyclotomicSum::constant(p, Rational(1)));
    }

    bool is_zero() const { return scalar.is_zero() || phases.is_zero(); }

    std::optional<Rational> as_rational() const {
        auto r = phases.as_rational();
        if (!r) return std::nullopt;
        return scalar * *r;
    }

    // scalar folded into the coefficient vector.
    CyclotomicSum flattened() const { return phases.scaled(scalar); }

    CyclotomicSum norm_sq() const { return phases.norm_sq().scaled(scalar * scalar); }

    FourierValue conj() const { return FourierValue(scalar, phases.conj()); }

    std::complex<double> to_complex() const { return scalar.to_double() * phases.to_complex(); }
};

} // namespace lfspec
