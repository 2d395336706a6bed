#pragma once

// Test-only oracles, independent of the library's digit-window arithmetic:
// characters and transforms evaluated through plain rational/complex math.

#include <complex>
#include <numeric>
#include <vector>

#include "lfspec/rational.hpp"

namespace oracle {

inline long long vp(long long x, long long p) {
    long long v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

// Fractional part of the rational r as a p-adic number: a value k/p^m in
// [0,1). Computed with pure integer arithmetic.
inline lfspec::Rational frac_part(long long p, const lfspec::Rational& r) {
    if (r.is_zero()) return lfspec::Rational(0);
    long long num = r.num(), den = r.den();
    long long m = vp(den, p);
    if (m == 0) return lfspec::Rational(0);
    long long pm = 1;
    for (long long i = 0; i < m; ++i) pm *= p;
    long long b = den / pm; // p does not divide b
    // r = num / (b p^m); fractional part = (num * b^{-1} mod p^m) / p^m
    long long binv = 1;
    {
        long long t = 0, nt = 1, rr = pm, nr = ((b % pm) + pm) % pm;
        while (nr != 0) {
            long long q = rr / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = rr - q * nr; rr = nr; nr = tmp;
        }
        binv = ((t % pm) + pm) % pm;
    }
    long long k = ((num % pm) * binv) % pm;
    k = ((k % pm) + pm) % pm;
    return lfspec::Rational(k, pm);
}

inline std::complex<double> character(long long p, const lfspec::Rational& y,
                                      const lfspec::Rational& x) {
    lfspec::Rational f = frac_part(p, y * x);
    double t = 2.0 * 3.14159265358979323846 * f.to_double();
    return {std::cos(t), std::sin(t)};
}

// mu^(xi) for the uniform atomic measure on rational points.
inline std::complex<double> ft_uniform_atoms(long long p, const std::vector<lfspec::Rational>& atoms,
                                             const lfspec::Rational& xi) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& s : atoms) acc += std::conj(character(p, xi, s));
    return acc / static_cast<double>(atoms.size());
}

} // namespace oracle
