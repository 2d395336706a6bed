#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lfspec {

// Exact rational arithmetic over 64-bit integers. Intermediates go through
// __int128 and anything that would not fit back into 64 bits throws instead
// of wrapping. All values in this project are desk-scale (powers of small
// primes, small character sums), so 64 bits is plenty; the guard exists to
// make silent overflow impossible, not to extend range.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}

    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    // base^exp with exp of either sign; base must be nonzero for exp < 0.
    static Rational pow_int(long long base, long long exp) {
        if (base == 0 && exp < 0) throw std::invalid_argument("Rational: 0^negative");
        bool invert = exp < 0;
        unsigned long long e = invert ? static_cast<unsigned long long>(-exp)
                                      : static_cast<unsigned long long>(exp);
        __int128 acc = 1;
        for (unsigned long long i = 0; i < e; ++i) {
            acc *= base;
            check(acc);
        }
        long long v = static_cast<long long>(acc);
        return invert ? Rational(1, v) : Rational(v);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return make(n, d);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return make(n, d);
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        __int128 n = static_cast<__int128>(num_) * o.den_;
        __int128 d = static_cast<__int128>(den_) * o.num_;
        return make(n, d);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_ = 0;
    long long den_ = 1;

    static void check(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rational: 64-bit overflow");
    }

    static Rational make(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        check(n);
        check(d);
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

} // namespace lfspec
