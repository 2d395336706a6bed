#include "lfspec/fourier.hpp"

#include <unordered_map>

namespace lfspec {

FourierValue ft_ball_indicator(const FieldModel& model, size_t dim, long long a, const Vec& xi) {
    if (xi.dim() != dim) throw std::invalid_argument("ft_ball_indicator: dimension mismatch");
    Ball support(Vec(std::vector<Element>(dim, Element::zero(model))), -a);
    if (!support.contains(xi)) return FourierValue::zero(model.p);
    Rational scale = Rational::pow_int(model.p, a * static_cast<long long>(dim));
    return FourierValue(scale, CyclotomicSum::constant(model.p, Rational(1)));
}

FourierValue ft_compact_open(const CompactOpenSet& O, const Vec& xi) {
    const FieldModel& model = O.model();
    if (xi.dim() != O.dim()) throw std::invalid_argument("ft_compact_open: dimension mismatch");
    long long a = O.scale();
    Ball support(Vec(std::vector<Element>(O.dim(), Element::zero(model))), -a);
    if (!support.contains(xi)) return FourierValue::zero(model.p);
    CyclotomicSum sum = CyclotomicSum::zero(model.p);
    for (const auto& b : O.balls())
        sum.add_phase(character(xi, b.center).conj());
    Rational scale = Rational::pow_int(model.p, a * static_cast<long long>(O.dim()));
    return FourierValue(scale, sum);
}

FourierValue ft_atomic(const AtomicMeasure& mu, const Vec& xi) {
    const FieldModel& model = mu.points[0].model();
    CyclotomicSum sum = CyclotomicSum::zero(model.p);
    for (size_t i = 0; i < mu.points.size(); ++i)
        sum.add_phase(character(xi, mu.points[i]).conj(), mu.weights[i]);
    return FourierValue(Rational(1), sum);
}

FourierValue ft_selfsimilar(const SelfSimilarMeasure& mu, const Vec& xi) {
    const FieldModel& model = mu.model;
    if (xi.dim() != 1) throw std::invalid_argument("ft_selfsimilar: d = 1 only");
    auto e = xi[0].abs_exp();
    if (!e || *e <= 0) {
        // |xi| <= 1: the character is 1 on the attractor, empty product.
        if (!e && -xi[0].prec() > 0)
            throw precision_error("ft_selfsimilar: cannot bound |xi|");
        return FourierValue(Rational(1), CyclotomicSum::constant(model.p, Rational(1)));
    }
    long long s = mu.ratio_exp;
    long long factors = (*e + s - 1) / s; // minimal J with |p^{sJ} xi| <= 1
    Rational scalar(1);
    CyclotomicSum prod = CyclotomicSum::constant(model.p, Rational(1));
    Rational inv_n(1, static_cast<long long>(mu.digits.size()));
    for (long long j = 0; j < factors; ++j) {
        Vec eta = xi.times_prime_pow(s * j);
        CyclotomicSum m = CyclotomicSum::zero(model.p);
        for (long long c : mu.digits) {
            Element ec = Element::from_integer(model, c, eta[0].prec() + 4);
            m.add_phase(character_at(eta[0] * ec).conj());
        }
        prod *= m;
        scalar *= inv_n;
    }
    return FourierValue(scalar, prod);
}

FourierValue mu_hat(const Measure& mu, const Vec& xi) {
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) return ft_atomic(*a, xi);
    if (const auto* u = std::get_if<UniformMeasure>(&mu)) {
        FourierValue v = ft_compact_open(u->set, xi);
        return FourierValue(v.scalar / u->set.measure(), v.phases);
    }
    return ft_selfsimilar(std::get<SelfSimilarMeasure>(mu), xi);
}

bool zero_set_contains(const Measure& mu, const Vec& xi) {
    return mu_hat(mu, xi).is_zero();
}

Rational double_integral_closed(long long p, long long a, long long b) {
    if (!FieldModel::is_prime(p)) throw std::invalid_argument("double_integral: p must be prime");
    return a + b >= 0 ? Rational::pow_int(p, a + b) : Rational::pow_int(p, 2 * (a + b));
}

Rational double_integral_cells(long long p, long long a, long long b) {
    if (!FieldModel::is_prime(p)) throw std::invalid_argument("double_integral: p must be prime");
    // Cells of radius p^c tile B(0, p^a); on a cell pair the integrand
    // p^{2b} [|xi-eta| <= p^{-b}] is constant because c <= -b and c <= a.
    long long c = std::min(a, -b);
    long long w = a - c; // p^w cells per axis
    long long n1 = 1;
    for (long long i = 0; i < w; ++i) n1 *= p;
    // Cell representatives are x = k p^{-a}, k = 0..n1-1. For a pair (i, j)
    // the difference is (i-j) p^{-a}, so |x-y| = p^{a - v_p(i-j)} (zero when
    // i == j) and the indicator holds iff v_p(i-j) >= a+b.
    Rational cell_measure = Rational::pow_int(p, c);
    Rational integrand = Rational::pow_int(p, 2 * b);
    long long hits = 0;
    if (n1 <= 2048) {
        for (long long i = 0; i < n1; ++i) {
            for (long long j = 0; j < n1; ++j) {
                long long diff = i >= j ? i - j : j - i;
                bool inside;
                if (diff == 0) {
                    inside = true;
                } else {
                    long long v = 0;
                    while (diff % p == 0) { diff /= p; ++v; }
                    inside = a - v <= -b;
                }
                if (inside) ++hits;
            }
        }
    } else {
        // Same sum grouped by residue class mod p^{max(0,a+b)}: the hit
        // count is the sum of squared class sizes.
        long long modulus = 1;
        for (long long i = 0; i < std::max(0LL, a + b); ++i) modulus *= p;
        std::unordered_map<long long, long long> buckets;
        for (long long i = 0; i < n1; ++i) ++buckets[i % modulus];
        for (const auto& [key, cnt] : buckets) hits += cnt * cnt;
    }
    return Rational(hits) * integrand * cell_measure * cell_measure;
}

} // namespace lfspec
