#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lfspec/rational.hpp"

namespace lfspec {

// exp(2*pi*i * k / p^m), canonical: m = 0 (phase 1) or p does not divide k.
struct RootOfUnityPhase {
    long long p = 2;
    long long k = 0;
    long long level = 0; // m

    RootOfUnityPhase() = default;

    static RootOfUnityPhase one(long long p) {
        RootOfUnityPhase r;
        r.p = p;
        return r;
    }

    // exp(2*pi*i * num / p^m), reduced to canonical form.
    static RootOfUnityPhase make(long long p, long long num, long long m) {
        if (m < 0) throw std::invalid_argument("RootOfUnityPhase: negative level");
        long long mod = 1;
        for (long long i = 0; i < m; ++i) mod *= p;
        num %= mod;
        if (num < 0) num += mod;
        while (m > 0 && num % p == 0) {
            num /= p;
            mod /= p;
            --m;
        }
        if (m == 0) num = 0;
        RootOfUnityPhase r;
        r.p = p;
        r.k = num;
        r.level = m;
        return r;
    }

    bool is_one() const { return level == 0; }

    RootOfUnityPhase operator*(const RootOfUnityPhase& o) const {
        if (p != o.p) throw std::invalid_argument("RootOfUnityPhase: prime mismatch");
        long long m = std::max(level, o.level);
        long long a = k, b = o.k;
        for (long long i = level; i < m; ++i) a *= p;
        for (long long i = o.level; i < m; ++i) b *= p;
        return make(p, a + b, m);
    }

    RootOfUnityPhase conj() const { return make(p, -k, level); }

    RootOfUnityPhase pow(long long e) const {
        long long mod = 1;
        for (long long i = 0; i < level; ++i) mod *= p;
        long long er = ((e % mod) + mod) % mod;
        return make(p, k * er, level);
    }

    bool operator==(const RootOfUnityPhase& o) const {
        return p == o.p && k == o.k && level == o.level;
    }
    bool operator!=(const RootOfUnityPhase& o) const { return !(*this == o); }

    std::complex<double> to_complex() const {
        long long mod = 1;
        for (long long i = 0; i < level; ++i) mod *= p;
        double t = 2.0 * 3.14159265358979323846 * static_cast<double>(k) / static_cast<double>(mod);
        return {std::cos(t), std::sin(t)};
    }
};

// Exact element of Q(zeta) with zeta = exp(2*pi*i / p^M), stored as sparse
// (exponent, coefficient) terms sorted by exponent. The zero test reduces
// modulo the cyclotomic polynomial Phi_{p^M}(x) = sum_{j<p} x^{j p^{M-1}}
// and inspects the basis coefficients; no floating point is involved in any
// decision.
class CyclotomicSum {
public:
    using Term = std::pair<long long, Rational>;

    CyclotomicSum() : p_(2), level_(0) {}

    CyclotomicSum(long long p, long long level) : p_(p), level_(level) {
        (void)pow_ll(p, level); // validates the level
    }

    static CyclotomicSum zero(long long p, long long level = 0) { return CyclotomicSum(p, level); }

    static CyclotomicSum constant(long long p, const Rational& c) {
        CyclotomicSum s(p, 0);
        if (!c.is_zero()) s.terms_.emplace_back(0, c);
        return s;
    }

    static CyclotomicSum from_phase(const RootOfUnityPhase& ph, const Rational& c = Rational(1)) {
        CyclotomicSum s(ph.p, ph.level);
        if (!c.is_zero()) s.terms_.emplace_back(ph.k, c);
        return s;
    }

    long long p() const { return p_; }
    long long level() const { return level_; }
    long long order() const { return pow_ll(p_, level_); }
    const std::vector<Term>& terms() const { return terms_; }

    void add_term(long long exponent, const Rational& c) {
        if (c.is_zero()) return;
        long long n = order();
        exponent %= n;
        if (exponent < 0) exponent += n;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                                   [](const Term& t, long long e) { return t.first < e; });
        if (it != terms_.end() && it->first == exponent) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, Term(exponent, c));
        }
    }

    void add_phase(const RootOfUnityPhase& ph, const Rational& c = Rational(1)) {
        if (ph.p != p_) throw std::invalid_argument("CyclotomicSum: prime mismatch");
        long long m = std::max(level_, ph.level);
        lift_to(m);
        long long e = ph.k;
        for (long long i = ph.level; i < m; ++i) e *= p_;
        add_term(e, c);
    }

    CyclotomicSum operator+(const CyclotomicSum& o) const {
        auto [a, b] = unified(*this, o);
        return merged(a, b, false);
    }

    CyclotomicSum operator-(const CyclotomicSum& o) const {
        auto [a, b] = unified(*this, o);
        return merged(a, b, true);
    }

    CyclotomicSum& operator+=(const CyclotomicSum& o) { return *this = *this + o; }
    CyclotomicSum& operator-=(const CyclotomicSum& o) { return *this = *this - o; }

    CyclotomicSum operator*(const CyclotomicSum& o) const {
        auto [a, b] = unified(*this, o);
        long long n = a.order();
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                long long e = ea + eb;
                if (e >= n) e -= n;
                prod.emplace_back(e, ca * cb);
            }
        }
        CyclotomicSum r(a.p_, a.level_);
        r.terms_ = combine(std::move(prod));
        return r;
    }

    CyclotomicSum& operator*=(const CyclotomicSum& o) { return *this = *this * o; }

    CyclotomicSum scaled(const Rational& c) const {
        CyclotomicSum r(p_, level_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    CyclotomicSum conj() const {
        long long n = order();
        std::vector<Term> t;
        t.reserve(terms_.size());
        for (const auto& [e, c] : terms_) t.emplace_back(e == 0 ? 0 : n - e, c);
        CyclotomicSum r(p_, level_);
        r.terms_ = combine(std::move(t));
        return r;
    }

    // |z|^2 = z * conj(z), exact.
    CyclotomicSum norm_sq() const { return *this * conj(); }

    // Terms over the integral basis {zeta^k : k < (p-1)p^{M-1}}, sorted.
    std::vector<Term> reduced_terms() const {
        if (level_ == 0) return terms_;
        long long n = order();
        long long pm1 = n / p_;
        long long phi = pm1 * (p_ - 1);
        std::vector<Term> out;
        out.reserve(terms_.size() * static_cast<size_t>(p_));
        for (const auto& [e, c] : terms_) {
            if (e < phi) {
                out.emplace_back(e, c);
            } else {
                long long base = e - phi; // in [0, p^{M-1})
                for (long long j = 0; j < p_ - 1; ++j)
                    out.emplace_back(base + j * pm1, -c);
            }
        }
        return combine(std::move(out));
    }

    bool is_zero() const { return reduced_terms().empty(); }

    // The exact rational value when the sum is rational (unique basis
    // representation: rational iff only the constant term survives).
    std::optional<Rational> as_rational() const {
        auto r = reduced_terms();
        if (r.empty()) return Rational(0);
        if (r.size() == 1 && r[0].first == 0) return r[0].second;
        return std::nullopt;
    }

    std::complex<double> to_complex() const {
        long long n = order();
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : terms_) {
            double t = 2.0 * 3.14159265358979323846 * static_cast<double>(e) / static_cast<double>(n);
            acc += c.to_double() * std::complex<double>(std::cos(t), std::sin(t));
        }
        return acc;
    }

    void lift_to(long long level) {
        if (level < level_) throw std::invalid_argument("CyclotomicSum: cannot lower level");
        if (level == level_) return;
        long long f = pow_ll(p_, level - level_);
        for (auto& t : terms_) t.first *= f;
        level_ = level;
    }

    static long long pow_ll(long long b, long long e) {
        long long r = 1;
        for (long long i = 0; i < e; ++i) {
            r *= b;
            if (r > (1LL << 40)) throw std::overflow_error("CyclotomicSum: level too large");
        }
        return r;
    }

private:
    long long p_;
    long long level_;
    std::vector<Term> terms_;

    static std::pair<CyclotomicSum, CyclotomicSum> unified(CyclotomicSum a, CyclotomicSum b) {
        if (a.p_ != b.p_) throw std::invalid_argument("CyclotomicSum: prime mismatch");
        long long m = std::max(a.level_, b.level_);
        a.lift_to(m);
        b.lift_to(m);
        return {std::move(a), std::move(b)};
    }

    // Sort by exponent and fold equal exponents, dropping zeros.
    static std::vector<Term> combine(std::vector<Term> t) {
        std::sort(t.begin(), t.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(t.size());
        for (auto& [e, c] : t) {
            if (!out.empty() && out.back().first == e) {
                out.back().second += c;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!c.is_zero()) {
                out.emplace_back(e, c);
            }
        }
        return out;
    }

    // Two-pointer merge of sorted term lists.
    static CyclotomicSum merged(const CyclotomicSum& a, const CyclotomicSum& b, bool subtract) {
        CyclotomicSum r(a.p_, a.level_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            bool take_a;
            if (i >= a.terms_.size()) take_a = false;
            else if (j >= b.terms_.size()) take_a = true;
            else take_a = a.terms_[i].first <= b.terms_[j].first;
            if (take_a && j < b.terms_.size() && i < a.terms_.size() &&
                a.terms_[i].first == b.terms_[j].first) {
                Rational c = subtract ? a.terms_[i].second - b.terms_[j].second
                                      : a.terms_[i].second + b.terms_[j].second;
                if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i;
                ++j;
            } else if (take_a) {
                r.terms_.push_back(a.terms_[i]);
                ++i;
            } else {
                Rational c = subtract ? -b.terms_[j].second : b.terms_[j].second;
                r.terms_.emplace_back(b.terms_[j].first, c);
                ++j;
            }
        }
        return r;
    }
};

} // namespace lfspec
