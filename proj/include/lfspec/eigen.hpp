#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace lfspec {

// Eigenvalues of a dense Hermitian matrix by cyclic complex Jacobi
// rotations. Deterministic: fixed sweep order, no pivoting heuristics, so
// identical input bits give identical output bits. Row-major n x n storage.
//
// Plenty for the desk-scale matrices here (Gram and Landau operators up to
// a few hundred rows); accuracy is near machine epsilon.
inline std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, size_t n,
                                                 double tol = 1e-13, int max_sweeps = 100) {
    if (a.size() != n * n) throw std::invalid_argument("hermitian_eigenvalues: bad size");
    if (n == 0) return {};
    auto at = [&](size_t i, size_t j) -> std::complex<double>& { return a[i * n + j]; };

    double scale = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
        if (std::sqrt(off) <= tol * scale * static_cast<double>(n)) break;

        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                double r = std::abs(at(p, q));
                if (r <= tol * scale * 1e-3) continue;
                std::complex<double> phase = at(p, q) / r;
                double app = at(p, p).real();
                double aqq = at(q, q).real();
                double tau = (aqq - app) / (2.0 * r);
                double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                std::complex<double> s = (t * c) * phase;

                at(p, p) = app - t * r;
                at(q, q) = aqq + t * r;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    std::complex<double> akp = at(k, p);
                    std::complex<double> akq = at(k, q);
                    at(k, p) = c * akp - std::conj(s) * akq;
                    at(k, q) = s * akp + c * akq;
                    at(p, k) = std::conj(at(k, p));
                    at(q, k) = std::conj(at(k, q));
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = at(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

} // namespace lfspec
