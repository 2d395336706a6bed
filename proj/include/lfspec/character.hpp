#pragma once

#include "lfspec/cyclotomic.hpp"
#include "lfspec/field.hpp"

namespace lfspec {

// The canonical character of K evaluated at a point:
//   PAdic:   chi(x) = exp(2*pi*i * {x})   with {x} the fractional part,
//   Laurent: chi(x) = exp((2*pi*i/p) * a_{-1}(x)).
// Both are 1 on the ring of integers and non-constant on p^{-1}D.
inline RootOfUnityPhase character_at(const Element& x) {
    const FieldModel& m = x.model();
    if (m.kind == FieldKind::PAdic) {
        Rational f = x.fractional_part();
        if (f.is_zero()) return RootOfUnityPhase::one(m.p);
        long long den = f.den();
        long long level = 0;
        while (den > 1) {
            den /= m.p;
            ++level;
        }
        return RootOfUnityPhase::make(m.p, f.num(), level);
    }
    int a = x.laurent_residue_coordinate();
    return RootOfUnityPhase::make(m.p, a, 1);
}

// chi_y(x) = chi(y . x).
inline RootOfUnityPhase character(const Vec& y, const Vec& x) {
    if (y.dim() != x.dim()) throw std::invalid_argument("character: dimension mismatch");
    return character_at(y.dot(x));
}

} // namespace lfspec
