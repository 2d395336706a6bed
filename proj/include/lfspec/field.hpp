#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lfspec/rational.hpp"

namespace lfspec {

// Exhausting the digit window of an element. Operations never truncate
// silently; anything that would need unknown digits throws this.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { PAdic, Laurent };

// K = Q_p (kind PAdic) or F_p((T)) (kind Laurent). Residue field is F_p in
// both cases; finite extensions are out of scope.
struct FieldModel {
    FieldKind kind = FieldKind::PAdic;
    long long p = 2;

    FieldModel() = default;
    FieldModel(FieldKind k, long long prime) : kind(k), p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("FieldModel: p must be prime");
    }

    static FieldModel padic(long long prime) { return FieldModel(FieldKind::PAdic, prime); }
    static FieldModel laurent(long long prime) { return FieldModel(FieldKind::Laurent, prime); }

    bool operator==(const FieldModel& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldModel& o) const { return !(*this == o); }

    static bool is_prime(long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

// A finite-precision element of K: the digit window [val, prec) of
// sum a_i p^i (resp. a_i T^i), known modulo p^prec (resp. T^prec).
// Canonical form: leading digit nonzero; zero-to-precision keeps no digits.
class Element {
public:
    // Default precision for elements built from exact data (rationals,
    // integers, polynomial literals). Generous for every desk-scale
    // computation in this project; callers may widen it explicitly.
    static constexpr long long kDefaultPrec = 64;

    static Element zero(const FieldModel& m, long long prec = kDefaultPrec) {
        Element e;
        e.model_ = m;
        e.prec_ = prec;
        return e;
    }

    // Digits d[0..] sit at indices val, val+1, ...; window extends to prec
    // (missing trailing digits are taken as known zeros).
    static Element from_digits(const FieldModel& m, long long val,
                               const std::vector<int>& d, long long prec) {
        for (int x : d)
            if (x < 0 || x >= m.p) throw std::invalid_argument("Element: digit out of range");
        if (val + static_cast<long long>(d.size()) > prec)
            throw std::invalid_argument("Element: digits extend past precision");
        Element e;
        e.model_ = m;
        e.prec_ = prec;
        e.digits_.assign(d.begin(), d.end());
        e.val_ = val;
        e.pad_to_prec();
        e.canonicalize();
        return e;
    }

    static Element from_integer(const FieldModel& m, long long k, long long prec = kDefaultPrec) {
        if (m.kind == FieldKind::Laurent) {
            long long r = ((k % m.p) + m.p) % m.p;
            if (r == 0) return zero(m, prec);
            return from_digits(m, 0, {static_cast<int>(r)}, prec);
        }
        return from_rational(m, Rational(k), prec);
    }

    // PAdic: Hensel digit extraction of a/b (any rational; p | den shifts the
    // valuation). Laurent: only the residue-field constants a/b mod p embed.
    static Element from_rational(const FieldModel& m, const Rational& r,
                                 long long prec = kDefaultPrec) {
        if (r.is_zero()) return zero(m, prec);
        if (m.kind == FieldKind::Laurent) {
            long long a = ((r.num() % m.p) + m.p) % m.p;
            long long b = ((r.den() % m.p) + m.p) % m.p;
            if (b == 0)
                throw std::invalid_argument("Element: rational with p | denominator has no Laurent image");
            long long d = (a * mod_inverse(b, m.p)) % m.p;
            if (d == 0) return zero(m, prec);
            return from_digits(m, 0, {static_cast<int>(d)}, prec);
        }
        long long a = r.num();
        long long b = r.den();
        long long v = 0;
        while (a % m.p == 0) { a /= m.p; ++v; }
        while (b % m.p == 0) { b /= m.p; --v; }
        if (v >= prec)
            throw std::invalid_argument("Element: precision window does not reach the leading digit");
        long long binv = mod_inverse(((b % m.p) + m.p) % m.p, m.p);
        std::vector<int> digits;
        digits.reserve(static_cast<size_t>(prec - v));
        for (long long i = v; i < prec; ++i) {
            long long d = ((a % m.p) * binv) % m.p;
            d = ((d % m.p) + m.p) % m.p;
            digits.push_back(static_cast<int>(d));
            a = (a - d * b) / m.p;
        }
        return from_digits(m, v, digits, prec);
    }

    const FieldModel& model() const { return model_; }
    long long prec() const { return prec_; }
    bool is_zero() const { return digits_.empty(); }

    // Valuation of a nonzero element; zero-to-precision has no finite one.
    long long valuation() const {
        if (is_zero()) throw std::domain_error("Element: valuation of zero");
        return val_;
    }

    // |x| = p^{abs_exp}; nullopt means |x| <= p^{-prec} (zero to precision).
    std::optional<long long> abs_exp() const {
        if (is_zero()) return std::nullopt;
        return -val_;
    }

    Rational abs() const {
        if (is_zero()) return Rational(0);
        return Rational::pow_int(model_.p, -val_);
    }

    // Digit a_i; indices below the window are known zeros, indices at or
    // above prec are unknown.
    int digit_at(long long i) const {
        if (i >= prec_) throw precision_error("Element: digit beyond precision window");
        if (is_zero() || i < val_) return 0;
        size_t off = static_cast<size_t>(i - val_);
        return off < digits_.size() ? digits_[off] : 0;
    }

    Element operator-() const {
        if (is_zero()) return *this;
        Element r;
        r.model_ = model_;
        r.prec_ = prec_;
        r.val_ = val_;
        r.digits_.resize(digits_.size());
        const long long p = model_.p;
        if (model_.kind == FieldKind::Laurent) {
            for (size_t i = 0; i < digits_.size(); ++i)
                r.digits_[i] = digits_[i] == 0 ? 0 : static_cast<int>(p - digits_[i]);
        } else {
            // -x = complement: first nonzero digit d -> p-d, later d -> p-1-d.
            r.digits_[0] = static_cast<int>(p - digits_[0]);
            for (size_t i = 1; i < digits_.size(); ++i)
                r.digits_[i] = static_cast<int>(p - 1 - digits_[i]);
        }
        r.canonicalize();
        return r;
    }

    Element operator+(const Element& o) const {
        require_same_model(o);
        long long prec = std::min(prec_, o.prec_);
        if (is_zero() && o.is_zero()) return zero(model_, prec);
        long long lo = std::min(low_index(), o.low_index());
        lo = std::min(lo, prec - 1);
        Element r;
        r.model_ = model_;
        r.prec_ = prec;
        r.val_ = lo;
        r.digits_.assign(static_cast<size_t>(prec - lo), 0);
        const long long p = model_.p;
        if (model_.kind == FieldKind::Laurent) {
            for (long long i = lo; i < prec; ++i)
                r.digits_[static_cast<size_t>(i - lo)] =
                    static_cast<int>((digit_at(i) + o.digit_at(i)) % p);
        } else {
            int carry = 0;
            for (long long i = lo; i < prec; ++i) {
                int s = digit_at(i) + o.digit_at(i) + carry;
                r.digits_[static_cast<size_t>(i - lo)] = static_cast<int>(s % p);
                carry = static_cast<int>(s / p);
            }
        }
        r.canonicalize();
        return r;
    }

    Element operator-(const Element& o) const { return *this + (-o); }

    Element operator*(const Element& o) const {
        require_same_model(o);
        // v(zero-to-precision) is bounded below by prec; that bound drives
        // the output window exactly as a finite valuation would.
        long long v1 = is_zero() ? prec_ : val_;
        long long v2 = o.is_zero() ? o.prec_ : o.val_;
        long long prec = std::min(v1 + o.prec_, v2 + prec_);
        if (is_zero() || o.is_zero()) return zero(model_, prec);
        long long lo = val_ + o.val_;
        size_t width = static_cast<size_t>(prec - lo);
        const long long p = model_.p;
        std::vector<long long> acc(width, 0);
        for (size_t i = 0; i < digits_.size(); ++i) {
            if (digits_[i] == 0) continue;
            for (size_t j = 0; j < o.digits_.size() && i + j < width; ++j)
                acc[i + j] += static_cast<long long>(digits_[i]) * o.digits_[j];
        }
        Element r;
        r.model_ = model_;
        r.prec_ = prec;
        r.val_ = lo;
        r.digits_.assign(width, 0);
        if (model_.kind == FieldKind::Laurent) {
            for (size_t i = 0; i < width; ++i)
                r.digits_[i] = static_cast<int>(acc[i] % p);
        } else {
            long long carry = 0;
            for (size_t i = 0; i < width; ++i) {
                long long s = acc[i] + carry;
                r.digits_[i] = static_cast<int>(s % p);
                carry = s / p;
            }
        }
        r.canonicalize();
        return r;
    }

    // Multiplication by the prime element to the k-th power is an exact
    // index shift (no precision loss beyond the shift itself).
    Element times_prime_pow(long long k) const {
        Element r = *this;
        r.prec_ += k;
        if (!r.is_zero()) r.val_ += k;
        return r;
    }

    // Multiplicative inverse by Newton iteration on the unit part:
    // x = p^v u gives x^{-1} = p^{-v} u^{-1}, known modulo p^{N - 2v}.
    Element inverse() const {
        if (is_zero()) throw std::domain_error("Element: inverse of zero");
        Element u = times_prime_pow(-val_); // unit, window [0, N - v)
        long long width = u.prec_;
        Element w = from_digits(model_, 0,
                                {static_cast<int>(mod_inverse(u.digits_[0], model_.p))}, width);
        Element two = from_integer(model_, 2, width);
        for (long long correct = 1; correct < width; correct *= 2)
            w = w * (two - u * w);
        if (!(u * w - from_integer(model_, 1, width)).is_zero())
            throw std::logic_error("Element: inverse iteration failed");
        return w.times_prime_pow(-val_);
    }

    // {x} = sum_{i<0} a_i p^i as a rational in [0,1). PAdic only; the whole
    // sub-unit window must be known.
    Rational fractional_part() const {
        if (model_.kind != FieldKind::PAdic)
            throw std::domain_error("fractional_part: PAdic only (use laurent_residue_coordinate)");
        if (prec_ < 0)
            throw precision_error("fractional_part: window does not reach index -1");
        if (is_zero() || val_ >= 0) return Rational(0);
        Rational acc(0);
        for (long long i = val_; i < 0; ++i)
            acc += Rational(digit_at(i)) * Rational::pow_int(model_.p, i);
        return acc;
    }

    // Coefficient a_{-1} of the Laurent expansion (the character exponent).
    int laurent_residue_coordinate() const {
        if (model_.kind != FieldKind::Laurent)
            throw std::domain_error("laurent_residue_coordinate: Laurent only");
        if (prec_ < 0)
            throw precision_error("laurent_residue_coordinate: window does not reach index -1");
        return digit_at(-1);
    }

    // Structural equality of canonical windows.
    bool operator==(const Element& o) const {
        return model_ == o.model_ && prec_ == o.prec_ && digits_ == o.digits_ &&
               (is_zero() || val_ == o.val_);
    }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Equal as values on the overlap of the two windows.
    bool agrees_with(const Element& o) const {
        if (model_ != o.model_) return false;
        long long hi = std::min(prec_, o.prec_);
        long long lo = hi;
        if (!is_zero()) lo = std::min(lo, val_);
        if (!o.is_zero()) lo = std::min(lo, o.val_);
        for (long long i = lo; i < hi; ++i)
            if (digit_at(i) != o.digit_at(i)) return false;
        return true;
    }

    std::string str() const {
        std::string s = model_.kind == FieldKind::PAdic ? "padic(p=" : "laurent(p=";
        s += std::to_string(model_.p) + ", ";
        if (is_zero()) {
            s += "0";
        } else {
            s += "v=" + std::to_string(val_) + ", [";
            for (size_t i = 0; i < digits_.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(digits_[i]);
            }
            s += "]";
        }
        s += ", N=" + std::to_string(prec_) + ")";
        return s;
    }

    static long long mod_inverse(long long a, long long p) {
        long long t = 0, new_t = 1, r = p, new_r = a % p;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (r != 1) throw std::domain_error("mod_inverse: not invertible");
        return ((t % p) + p) % p;
    }

private:
    FieldModel model_;
    long long prec_ = kDefaultPrec;
    long long val_ = 0;               // meaningful only when digits_ nonempty
    std::vector<int> digits_;         // digits_[i] = a_{val_+i}, leading nonzero

    long long low_index() const { return is_zero() ? prec_ : val_; }

    void require_same_model(const Element& o) const {
        if (model_ != o.model_)
            throw std::invalid_argument("Element: field model mismatch");
    }

    void pad_to_prec() {
        digits_.resize(static_cast<size_t>(prec_ - val_), 0);
    }

    void canonicalize() {
        size_t lead = 0;
        while (lead < digits_.size() && digits_[lead] == 0) ++lead;
        if (lead == digits_.size()) {
            digits_.clear();
            val_ = 0;
            return;
        }
        if (lead > 0) {
            digits_.erase(digits_.begin(), digits_.begin() + static_cast<long>(lead));
            val_ += static_cast<long long>(lead);
        }
    }
};

// Point of K^d with the max norm.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::vector<Element> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw std::invalid_argument("Vec: empty");
        for (const auto& c : comps_)
            if (c.model() != comps_[0].model())
                throw std::invalid_argument("Vec: mixed field models");
    }
    explicit Vec(Element e) { comps_.push_back(std::move(e)); }

    size_t dim() const { return comps_.size(); }
    const FieldModel& model() const { return comps_[0].model(); }
    const Element& operator[](size_t i) const { return comps_[i]; }

    // |x| = max_j |x_j| as p^e; nullopt when every component is zero to
    // precision (then |x| <= p^{-min prec}). A zero-to-precision component
    // whose bound p^{-N} exceeds every known |x_j| leaves the max unknown.
    std::optional<long long> abs_exp() const {
        std::optional<long long> best;
        long long unknown = std::numeric_limits<long long>::min();
        for (const auto& c : comps_) {
            auto e = c.abs_exp();
            if (e && (!best || *e > *best)) best = e;
            if (!e) unknown = std::max(unknown, -c.prec());
        }
        if (best && unknown > *best)
            throw precision_error("Vec::abs_exp: zero-to-precision component may dominate");
        return best;
    }

    Vec operator+(const Vec& o) const { return zip(o, [](const Element& a, const Element& b) { return a + b; }); }
    Vec operator-(const Vec& o) const { return zip(o, [](const Element& a, const Element& b) { return a - b; }); }

    Vec operator*(const Element& s) const {
        std::vector<Element> out;
        out.reserve(comps_.size());
        for (const auto& c : comps_) out.push_back(c * s);
        return Vec(std::move(out));
    }

    Vec times_prime_pow(long long k) const {
        std::vector<Element> out;
        out.reserve(comps_.size());
        for (const auto& c : comps_) out.push_back(c.times_prime_pow(k));
        return Vec(std::move(out));
    }

    Element dot(const Vec& o) const {
        if (dim() != o.dim()) throw std::invalid_argument("Vec: dimension mismatch");
        Element acc = comps_[0] * o.comps_[0];
        for (size_t j = 1; j < comps_.size(); ++j) acc = acc + comps_[j] * o.comps_[j];
        return acc;
    }

    bool operator==(const Vec& o) const { return comps_ == o.comps_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

    std::string str() const {
        if (comps_.size() == 1) return comps_[0].str();
        std::string s = "(";
        for (size_t i = 0; i < comps_.size(); ++i) {
            if (i) s += ", ";
            s += comps_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Element> comps_;

    template <typename F>
    Vec zip(const Vec& o, F f) const {
        if (dim() != o.dim()) throw std::invalid_argument("Vec: dimension mismatch");
        std::vector<Element> out;
        out.reserve(comps_.size());
        for (size_t j = 0; j < comps_.size(); ++j) out.push_back(f(comps_[j], o.comps_[j]));
        return Vec(std::move(out));
    }
};

inline Vec vec1(Element e) { return Vec(std::move(e)); }

inline Vec rational_point(const FieldModel& m, const Rational& r,
                          long long prec = Element::kDefaultPrec) {
    return Vec(Element::from_rational(m, r, prec));
}

} // namespace lfspec
