#include "lfspec/landau.hpp"

#include <algorithm>

#include "lfspec/character.hpp"
#include "lfspec/eigen.hpp"

namespace lfspec {

namespace {

constexpr size_t kMaxCells = 4096;

long long center_abs_bound(const CompactOpenSet& o) {
    long long bound = 0; // only centers outside the unit ball constrain m
    for (const auto& b : o.balls()) {
        auto e = b.center.abs_exp();
        if (e) bound = std::max(bound, *e);
    }
    return bound;
}

} // namespace

long long min_grid_scale(const LandauProblem& prob) {
    long long m = std::max(prob.omega.scale(), -prob.delta.scale());
    m = std::max(m, center_abs_bound(prob.omega));
    return m;
}

std::vector<std::complex<double>> AssembledOperator::to_complex() const {
    std::vector<std::complex<double>> out(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) out[i] = entries[i].to_complex();
    return out;
}

AssembledOperator assemble_matrix(const LandauProblem& prob, std::optional<long long> grid) {
    long long m = grid.value_or(min_grid_scale(prob));
    if (m < min_grid_scale(prob))
        throw std::invalid_argument("assemble_matrix: grid too coarse for local constancy");
    AssembledOperator op;
    op.grid_scale = m;
    op.cells = prob.delta.cell_centers(m);
    size_t n = op.cells.size();
    if (n > kMaxCells) throw std::invalid_argument("assemble_matrix: grid too large");
    Rational cell = Rational::pow_int(prob.model().p, -m);
    op.entries.reserve(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            FourierValue v = ft_compact_open(prob.omega, op.cells[i] - op.cells[j]);
            op.entries.emplace_back(v.scalar * cell, v.phases);
        }
    }
    return op;
}

FourierValue landau_kernel(const LandauProblem& prob, const Vec& eta, const Vec& xi) {
    const FieldModel& model = prob.model();
    long long a = prob.delta.scale();
    long long b = prob.omega.scale();
    // W = B(eta, p^{-b}) n B(xi, p^{-b}): empty unless |eta - xi| <= p^{-b}.
    Ball wball(eta, -b);
    if (!wball.contains(xi)) return FourierValue::zero(model.p);
    // Delta n W is a disjoint union of balls of radius p^c.
    long long c = std::min(a, -b);
    std::vector<Vec> pieces; // centers of the radius-p^c balls of Delta n W
    if (-b <= a) {
        for (const auto& db : prob.delta.balls())
            if (db.contains(eta)) { pieces.push_back(eta); break; }
    } else {
        for (const auto& db : prob.delta.balls())
            if (wball.contains(db.center)) pieces.push_back(db.center);
    }
    if (pieces.empty()) return FourierValue::zero(model.p);

    CyclotomicSum acc = CyclotomicSum::zero(model.p);
    for (const auto& bj : prob.omega.balls()) {
        for (const auto& bjp : prob.omega.balls()) {
            Vec u = bj.center - bjp.center; // y_j - y_j'
            auto ue = u.abs_exp();
            if (ue && *ue > -c) continue;   // integral of chi(t u) vanishes
            // chi(xi y_j' - eta y_j) * sum_z chi(z u)
            RootOfUnityPhase outer =
                character(xi, bjp.center) * character(eta, bj.center).conj();
            for (const auto& z : pieces) {
                RootOfUnityPhase inner = character_at(z.dot(u));
                acc.add_phase(outer * inner);
            }
        }
    }
    Rational scale = Rational::pow_int(model.p, 2 * b + c);
    return FourierValue(scale, acc);
}

AssembledOperator assemble_full_operator(const LandauProblem& prob, std::optional<long long> grid) {
    long long b = prob.omega.scale();
    // Kernel support: Delta inflated to radius max(p^a, p^{-b}).
    long long support_scale = std::max(prob.delta.scale(), -b);
    CompactOpenSet support = prob.delta.inflated(support_scale);
    long long m = grid.value_or(std::max(min_grid_scale(prob), -support_scale));
    AssembledOperator op;
    op.grid_scale = m;
    op.cells = support.cell_centers(m);
    size_t n = op.cells.size();
    if (n > kMaxCells) throw std::invalid_argument("assemble_full_operator: grid too large");
    Rational cell = Rational::pow_int(prob.model().p, -m);
    op.entries.reserve(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            FourierValue v = landau_kernel(prob, op.cells[i], op.cells[j]);
            op.entries.emplace_back(v.scalar * cell, v.phases);
        }
    }
    return op;
}

Rational trace_exact(const AssembledOperator& op) {
    size_t n = op.size();
    Rational acc(0);
    for (size_t i = 0; i < n; ++i) {
        auto r = op.entries[i * n + i].as_rational();
        if (!r) throw std::logic_error("trace_exact: non-rational diagonal");
        acc += *r;
    }
    return acc;
}

Rational frobenius_sq_exact(const AssembledOperator& op) {
    size_t n = op.size();
    long long p = 2;
    if (n > 0) p = op.cells[0].model().p;
    CyclotomicSum acc = CyclotomicSum::zero(p);
    for (const auto& e : op.entries) acc += e.norm_sq();
    auto r = acc.as_rational();
    if (!r) throw std::logic_error("frobenius_sq_exact: non-rational value");
    return *r;
}

EigenReport eigen_report(const LandauProblem& prob, std::optional<long long> grid, double tol) {
    AssembledOperator op = assemble_matrix(prob, grid);
    EigenReport rep;
    rep.grid_scale = op.grid_scale;
    rep.tolerance = tol;
    rep.trace = trace_exact(op);
    rep.frobenius_sq = frobenius_sq_exact(op);
    rep.eigenvalues = hermitian_eigenvalues(op.to_complex(), op.size());
    for (double l : rep.eigenvalues)
        if (std::abs(l - 1.0) <= tol) ++rep.multiplicity_of_one;
    return rep;
}

bool eigenprojection_check(const FieldModel& model, long long a, long long b) {
    if (a + b < 0) throw std::invalid_argument("eigenprojection_check: need a + b >= 0");
    Vec zero(Element::zero(model, Element::kDefaultPrec));
    LandauProblem prob(CompactOpenSet::single_ball(zero, b), CompactOpenSet::single_ball(zero, a));
    AssembledOperator op = assemble_matrix(prob);
    size_t n = op.size();
    // Balls of radius p^{-b} inside B(0, p^a); membership of each grid cell
    // is decided exactly rather than assuming any cell ordering.
    std::vector<Vec> ball_centers = prob.delta.cell_centers(b); // q^{a+b} balls
    for (const auto& bc : ball_centers) {
        Ball indicator_ball(bc, -b);
        std::vector<char> in(n, 0);
        for (size_t i = 0; i < n; ++i) in[i] = indicator_ball.contains(op.cells[i]) ? 1 : 0;
        // exact matvec: (M x)_i = sum_j M[i,j] x_j must reproduce x
        for (size_t i = 0; i < n; ++i) {
            CyclotomicSum acc = CyclotomicSum::zero(model.p);
            for (size_t j = 0; j < n; ++j) {
                if (!in[j]) continue;
                acc += op.entries[i * n + j].flattened();
            }
            CyclotomicSum expect = CyclotomicSum::constant(model.p, Rational(in[i] ? 1 : 0));
            if (!(acc - expect).is_zero()) return false;
        }
    }
    return true;
}

namespace {

bool spectra_match(std::vector<double> x, std::vector<double> y, double tol) {
    size_t n = std::max(x.size(), y.size());
    x.resize(n, 0.0);
    y.resize(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        if (std::abs(x[i] - y[i]) > tol) return false;
    return true;
}

} // namespace

LandauPropertyReport verify_properties(const LandauProblem& prob, const LandauTransforms& tr,
                                       double tol) {
    LandauPropertyReport rep;
    EigenReport base = eigen_report(prob);

    // (a) translation invariance
    LandauProblem shifted(prob.omega.translated(tr.sigma), prob.delta.translated(tr.tau));
    rep.translation = spectra_match(base.eigenvalues, eigen_report(shifted).eigenvalues, tol);

    // (b) scaling invariance: (a Omega, a^{-1} Delta)
    {
        LandauProblem scaled(prob.omega.scaled(tr.scale), prob.delta.scaled(tr.scale.inverse()));
        rep.scaling = spectra_match(base.eigenvalues, eigen_report(scaled).eigenvalues, tol);
    }

    // (c) symmetry
    LandauProblem swapped(prob.delta, prob.omega);
    rep.symmetry = spectra_match(base.eigenvalues, eigen_report(swapped).eigenvalues, tol);

    // (d) monotonicity for delta1 subset of delta
    {
        EigenReport sub = eigen_report(LandauProblem(prob.omega, tr.delta1));
        rep.monotonicity = true;
        for (size_t k = 0; k < sub.eigenvalues.size(); ++k) {
            double big = k < base.eigenvalues.size() ? base.eigenvalues[k] : 0.0;
            if (sub.eigenvalues[k] > big + tol) { rep.monotonicity = false; break; }
        }
    }

    // (e) exact trace identity
    rep.trace_identity = base.trace == prob.omega.measure() * prob.delta.measure();

    // (f) Frobenius^2 equals the double integral of |1^_Omega|^2 over Delta x Delta:
    // exactly at two grid resolutions (local constancy makes them equal) and
    // checked against sum of squared eigenvalues numerically.
    {
        Rational fine = frobenius_sq_exact(assemble_matrix(prob, min_grid_scale(prob) + 1));
        double sum_sq = 0.0;
        for (double l : base.eigenvalues) sum_sq += l * l;
        rep.frobenius_identity =
            base.frobenius_sq == fine && std::abs(sum_sq - base.frobenius_sq.to_double()) <= tol;
    }

    // (g) superadditivity over the partition delta = delta1 u delta2, exact
    {
        // validate the partition
        Rational total = tr.delta1.measure() + tr.delta2.measure();
        if (total != prob.delta.measure())
            throw std::invalid_argument("verify_properties: delta1, delta2 do not partition delta");
        Rational f1 = frobenius_sq_exact(assemble_matrix(LandauProblem(prob.omega, tr.delta1)));
        Rational f2 = frobenius_sq_exact(assemble_matrix(LandauProblem(prob.omega, tr.delta2)));
        rep.superadditivity = base.frobenius_sq >= f1 + f2;
    }

    return rep;
}

} // namespace lfspec
