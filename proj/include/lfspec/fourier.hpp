#pragma once

#include "lfspec/character.hpp"
#include "lfspec/measure.hpp"

namespace lfspec {

// 1^_{B(0,p^a)}(xi) = p^{da} 1_{B(0,p^{-a})}(xi), componentwise in d.
FourierValue ft_ball_indicator(const FieldModel& model, size_t dim, long long a, const Vec& xi);

// 1^_O(xi) = p^{da} 1_{B(0,p^{-a})}(xi) sum_j chi(-xi . tau_j) for O in A_a.
FourierValue ft_compact_open(const CompactOpenSet& O, const Vec& xi);

// mu^(xi) = sum_s w_s conj(chi(xi . s)).
FourierValue ft_atomic(const AtomicMeasure& mu, const Vec& xi);

// mu^(xi) = prod_{j=0}^{J-1} M(p^{sj} xi), M(eta) = (1/|C|) sum_c conj(chi(eta c)),
// where J is minimal with |p^{sJ} xi| <= 1 (empty product for |xi| <= 1).
FourierValue ft_selfsimilar(const SelfSimilarMeasure& mu, const Vec& xi);

// Normalized transform of any measure in scope.
FourierValue mu_hat(const Measure& mu, const Vec& xi);

// xi in Z_mu = {xi : mu^(xi) = 0}, decided exactly.
bool zero_set_contains(const Measure& mu, const Vec& xi);

// Closed form of int int_{|xi|,|eta|<=p^a} |1^_{B(0,p^b)}(xi-eta)|^2 dxi deta
// = p^{a+b} if a+b >= 0, p^{2(a+b)} otherwise (d = 1).
Rational double_integral_closed(long long p, long long a, long long b);

// The same integral by exact summation over cells of B(0,p^a)^2 on which the
// integrand is constant. Independent of the closed form.
Rational double_integral_cells(long long p, long long a, long long b);

} // namespace lfspec
