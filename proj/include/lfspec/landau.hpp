#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lfspec/fourier.hpp"

namespace lfspec {

// Time-frequency pair for the Landau operator L = T_Omega P_Delta T_Omega:
// Omega in A_b (time side), Delta in A_a (frequency side), d = 1.
struct LandauProblem {
    CompactOpenSet omega;
    CompactOpenSet delta;

    LandauProblem(CompactOpenSet o, CompactOpenSet d) : omega(std::move(o)), delta(std::move(d)) {
        if (omega.dim() != 1 || delta.dim() != 1)
            throw std::invalid_argument("LandauProblem: d = 1 only");
        if (omega.model() != delta.model())
            throw std::invalid_argument("LandauProblem: model mismatch");
    }

    const FieldModel& model() const { return omega.model(); }
};

// Smallest cell scale m making the discretization exact: the kernel is
// constant on cell x cell blocks once p^{-m} is finer than p^{-b} and than
// every |y_j|^{-1} (characters xi -> chi(xi y_j) are locally constant at
// that resolution), and cells must subdivide the balls of Delta.
long long min_grid_scale(const LandauProblem& prob);

// The discretized auxiliary operator L# = P_Delta T_Omega P_Delta on
// locally constant functions over the cells of Delta. Entries are exact:
// M[c,c'] = 1^_Omega(rep_c - rep_{c'}) * p^{-m}.
struct AssembledOperator {
    std::vector<Vec> cells;
    long long grid_scale = 0;
    std::vector<FourierValue> entries; // row-major, scalar includes p^{-m}
    size_t size() const { return cells.size(); }
    std::vector<std::complex<double>> to_complex() const;
};

AssembledOperator assemble_matrix(const LandauProblem& prob,
                                  std::optional<long long> grid = std::nullopt);

// Exact kernel of L itself:
// K(eta, xi) = int 1_Delta(t) 1^_Omega(eta-t) conj(1^_Omega(xi-t)) dt.
FourierValue landau_kernel(const LandauProblem& prob, const Vec& eta, const Vec& xi);

// L realized on the inflated grid (kernel support), for the cross-check
// that L and L# share their nonzero spectrum.
AssembledOperator assemble_full_operator(const LandauProblem& prob,
                                         std::optional<long long> grid = std::nullopt);

Rational trace_exact(const AssembledOperator& op);
Rational frobenius_sq_exact(const AssembledOperator& op);

struct EigenReport {
    std::vector<double> eigenvalues; // decreasing
    long long multiplicity_of_one = 0;
    Rational trace;
    Rational frobenius_sq;
    long long grid_scale = 0;
    double tolerance = 1e-9;
};

EigenReport eigen_report(const LandauProblem& prob, std::optional<long long> grid = std::nullopt,
                         double tol = 1e-9);

// Ball case: for Omega = B(0,p^b), Delta = B(0,p^a), a+b >= 0, every
// indicator of a ball of radius p^{-b} inside Delta is an exact fixed
// point of the assembled operator (checked in cyclotomic arithmetic).
bool eigenprojection_check(const FieldModel& model, long long a, long long b);

// The eigenvalue invariance suite; (e)-(g) are exact rational identities,
// spectra comparisons use the given tolerance.
struct LandauPropertyReport {
    bool translation = false;   // (a)
    bool scaling = false;       // (b)
    bool symmetry = false;      // (c)
    bool monotonicity = false;  // (d)
    bool trace_identity = false;    // (e)
    bool frobenius_identity = false;// (f)
    bool superadditivity = false;   // (g)
    bool all() const {
        return translation && scaling && symmetry && monotonicity && trace_identity &&
               frobenius_identity && superadditivity;
    }
};

struct LandauTransforms {
    Vec sigma;               // time shift
    Vec tau;                 // frequency shift
    Element scale;           // nonzero scalar a for (b)
    CompactOpenSet delta1;   // partition piece (also the (d) subset)
    CompactOpenSet delta2;   // remaining piece, delta1 u delta2 = delta
};

LandauPropertyReport verify_properties(const LandauProblem& prob, const LandauTransforms& tr,
                                       double tol = 1e-9);

} // namespace lfspec
