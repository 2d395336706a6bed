#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lfspec/field.hpp"

namespace lfspec {

// Closed ball B(center, p^radius_exp) in K^d.
struct Ball {
    Vec center;
    long long radius_exp = 0;

    Ball(Vec c, long long n) : center(std::move(c)), radius_exp(n) {}

    size_t dim() const { return center.dim(); }
    const FieldModel& model() const { return center.model(); }

    Rational measure() const {
        return Rational::pow_int(model().p, radius_exp * static_cast<long long>(dim()));
    }

    // |x - center| <= p^radius_exp; throws precision_error when the digit
    // windows cannot settle the comparison.
    bool contains(const Vec& x) const {
        Vec d = x - center;
        auto e = d.abs_exp();
        if (!e) {
            // |d| <= p^{-min prec}; decidable unless the window stops exactly
            // at the radius.
            long long bound = min_prec(d);
            if (-bound <= radius_exp) return true;
            throw precision_error("Ball::contains: precision exhausted");
        }
        return *e <= radius_exp;
    }

    // |x - center| == p^n exactly (membership in the sphere S(center, p^n)).
    bool on_sphere(const Vec& x, long long n) const {
        Vec d = x - center;
        auto e = d.abs_exp();
        if (!e) {
            long long bound = min_prec(d);
            if (-bound < n) return false; // |d| < p^n for sure
            throw precision_error("Ball::on_sphere: precision exhausted");
        }
        return *e == n;
    }

    // Ultrametric dichotomy: two balls of equal radius coincide or are disjoint.
    bool same_set(const Ball& o) const {
        if (radius_exp != o.radius_exp) return false;
        return contains(o.center);
    }

    Ball translated(const Vec& t) const { return Ball(center + t, radius_exp); }

    // a * B(c, p^n) = B(a c, p^{n - v(a)}).
    Ball scaled(const Element& a) const {
        if (a.is_zero()) throw std::invalid_argument("Ball::scaled: zero scalar");
        return Ball(center * a, radius_exp - a.valuation());
    }

private:
    static long long min_prec(const Vec& v) {
        long long m = v[0].prec();
        for (size_t j = 1; j < v.dim(); ++j) m = std::min(m, v[j].prec());
        return m;
    }
};

// Canonical coset representatives modulo the prime power: for index
// i = 0..p^w-1, the element whose digits at positions lo..lo+w-1 are the
// base-p digits of i (integers 0..p^N-1 for PAdic, polynomials for Laurent;
// the digit expansion is the same bookkeeping in both models).
inline Element canonical_rep(const FieldModel& m, long long index, long long lo, long long width,
                             long long prec = Element::kDefaultPrec) {
    std::vector<int> digits;
    digits.reserve(static_cast<size_t>(width));
    for (long long i = 0; i < width; ++i) {
        digits.push_back(static_cast<int>(index % m.p));
        index /= m.p;
    }
    return Element::from_digits(m, lo, digits, std::max(prec, lo + width));
}

// The class A_n: a finite disjoint union of balls of radius p^scale.
class CompactOpenSet {
public:
    CompactOpenSet(long long scale, std::vector<Ball> balls) : scale_(scale), balls_(std::move(balls)) {
        if (balls_.empty()) throw std::invalid_argument("CompactOpenSet: empty");
        for (const auto& b : balls_) {
            if (b.radius_exp != scale_)
                throw std::invalid_argument("CompactOpenSet: mixed radii");
            if (b.model() != balls_[0].model() || b.dim() != balls_[0].dim())
                throw std::invalid_argument("CompactOpenSet: mixed models/dimensions");
        }
        for (size_t i = 0; i < balls_.size(); ++i)
            for (size_t j = i + 1; j < balls_.size(); ++j)
                if (balls_[i].same_set(balls_[j]))
                    throw std::invalid_argument("CompactOpenSet: balls not disjoint");
    }

    static CompactOpenSet single_ball(Vec center, long long n) {
        std::vector<Ball> b;
        b.emplace_back(std::move(center), n);
        return CompactOpenSet(n, std::move(b));
    }

    // Union with duplicates removed (overlapping equal-radius balls coincide).
    static CompactOpenSet normalized_union(long long scale, const std::vector<Ball>& balls) {
        std::vector<Ball> keep;
        for (const auto& b : balls) {
            bool dup = false;
            for (const auto& k : keep)
                if (k.same_set(b)) { dup = true; break; }
            if (!dup) keep.push_back(b);
        }
        return CompactOpenSet(scale, std::move(keep));
    }

    long long scale() const { return scale_; }
    const std::vector<Ball>& balls() const { return balls_; }
    size_t ball_count() const { return balls_.size(); }
    size_t dim() const { return balls_[0].dim(); }
    const FieldModel& model() const { return balls_[0].model(); }

    Rational measure() const {
        return Rational(static_cast<long long>(balls_.size())) * balls_[0].measure();
    }

    bool contains(const Vec& x) const {
        for (const auto& b : balls_)
            if (b.contains(x)) return true;
        return false;
    }

    CompactOpenSet translated(const Vec& t) const {
        std::vector<Ball> out;
        out.reserve(balls_.size());
        for (const auto& b : balls_) out.push_back(b.translated(t));
        return CompactOpenSet(scale_, std::move(out));
    }

    CompactOpenSet scaled(const Element& a) const {
        std::vector<Ball> out;
        out.reserve(balls_.size());
        for (const auto& b : balls_) out.push_back(b.scaled(a));
        return CompactOpenSet(scale_ - a.valuation(), std::move(out));
    }

    // Inflate every ball to radius p^n (n >= scale) and merge coincident
    // results; used for the support of Landau kernels.
    CompactOpenSet inflated(long long n) const {
        if (n < scale_) throw std::invalid_argument("CompactOpenSet::inflated: shrinking");
        std::vector<Ball> out;
        out.reserve(balls_.size());
        for (const auto& b : balls_) out.emplace_back(b.center, n);
        return normalized_union(n, out);
    }

    // Split every ball into cells of radius p^{-m} (requires m >= -scale);
    // returns the cell centers in deterministic order. d = 1 only.
    std::vector<Vec> cell_centers(long long m) const {
        if (dim() != 1)
            throw std::invalid_argument("CompactOpenSet::cell_centers: d = 1 only");
        if (m < -scale_)
            throw std::invalid_argument("CompactOpenSet::cell_centers: cells larger than balls");
        long long w = scale_ + m; // cells per ball = p^w
        long long count = 1;
        for (long long i = 0; i < w; ++i) count *= model().p;
        std::vector<Vec> out;
        out.reserve(balls_.size() * static_cast<size_t>(count));
        for (const auto& b : balls_) {
            for (long long u = 0; u < count; ++u) {
                Element offset = canonical_rep(model(), u, -scale_, w);
                out.push_back(Vec(b.center[0] + offset));
            }
        }
        return out;
    }

private:
    long long scale_;
    std::vector<Ball> balls_;
};

} // namespace lfspec
