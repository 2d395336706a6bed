// lfspec: exact spectral-measure computations on Q_p and F_p((T)).
//
// Subcommands mirror the library: ft, qlattice, spectral-check, hadamard,
// triad, landau, selfsimilar, acceptance. All output is deterministic JSON.
// Exit codes: 0 = checks passed, 1 = a verification failed, 2 = usage error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lfspec/acceptance.hpp"
#include "lfspec/json_io.hpp"
#include "lfspec/parse.hpp"

namespace {

using lfspec::json;

struct GlobalOpts {
    bool pretty = false;
    std::string out_path;
    unsigned threads = 0;
};

void emit(const GlobalOpts& g, const json& j) {
    std::string text = g.pretty ? j.dump(2) : j.dump();
    if (g.out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(g.out_path);
        f << text << "\n";
    }
}

struct MeasureOpts {
    long long p = 2;
    std::string model_name = "padic";
    std::string uniform_set;
    std::string atoms;
    std::string weights;
    std::string ifs_digits;
    long long ifs_ratio = 0;

    lfspec::FieldModel model() const {
        if (model_name == "padic") return lfspec::FieldModel::padic(p);
        if (model_name == "laurent") return lfspec::FieldModel::laurent(p);
        throw lfspec::parse_error("unknown model '" + model_name + "'");
    }

    lfspec::Measure build() const {
        int given = (!uniform_set.empty()) + (!atoms.empty()) + (!ifs_digits.empty());
        if (given != 1)
            throw lfspec::parse_error("specify exactly one of --uniform, --atoms, --ifs-digits");
        if (!uniform_set.empty())
            return lfspec::UniformMeasure(lfspec::parse_compact_open(model(), uniform_set));
        if (!atoms.empty()) {
            auto pts = lfspec::parse_point_list(model(), atoms);
            if (weights.empty()) return lfspec::AtomicMeasure::uniform(pts);
            std::vector<lfspec::Rational> w;
            for (const auto& s : lfspec::split_top_level(weights, ",;"))
                w.push_back(lfspec::parse_rational(s));
            return lfspec::AtomicMeasure(pts, w);
        }
        if (ifs_ratio < 1) throw lfspec::parse_error("--ifs-digits requires --ifs-ratio >= 1");
        return lfspec::SelfSimilarMeasure(model(), ifs_ratio, lfspec::parse_residue_list(ifs_digits));
    }

    void attach(CLI::App* cmd, bool with_ifs = true) {
        cmd->add_option("--p", p, "prime of the field")->required();
        cmd->add_option("--model", model_name, "padic | laurent");
        cmd->add_option("--uniform", uniform_set, "compact open set, e.g. \"ball(0,1) + ball(3,1/2)\"");
        cmd->add_option("--atoms", atoms, "atom list for an atomic measure");
        cmd->add_option("--weights", weights, "optional weights (default uniform)");
        if (with_ifs) {
            cmd->add_option("--ifs-digits", ifs_digits, "digit set C of f_c(x) = p^s x + c");
            cmd->add_option("--ifs-ratio", ifs_ratio, "ratio exponent s");
        }
    }
};

int run_ft(const GlobalOpts& g, const MeasureOpts& m, const std::string& xi_list) {
    auto model = m.model();
    auto mu = m.build();
    json out;
    out["measure"] = lfspec::to_json(mu);
    json values = json::array();
    for (const auto& xi : lfspec::parse_point_list(model, xi_list)) {
        auto v = lfspec::mu_hat(mu, xi);
        json e;
        e["xi"] = lfspec::to_json(xi);
        e["value"] = lfspec::to_json(v);
        e["in_zero_set"] = v.is_zero();
        values.push_back(e);
    }
    out["values"] = values;
    emit(g, out);
    return 0;
}

int run_qlattice(const GlobalOpts& g, long long p, const std::string& model_name, long long radius,
                 bool with_density, long long scale_lo, long long scale_hi) {
    auto model = model_name == "laurent" ? lfspec::FieldModel::laurent(p)
                                         : lfspec::FieldModel::padic(p);
    lfspec::QuasiLattice L(model);
    auto pts = L.enumerate(radius);
    json out;
    out["p"] = p;
    out["model"] = model_name;
    out["radius_exp"] = radius;
    json jp = json::array();
    for (const auto& x : pts) jp.push_back(lfspec::to_json(x));
    out["points"] = jp;
    out["count"] = static_cast<long long>(pts.size());
    if (pts.size() >= 2) out["separation"] = lfspec::to_json(lfspec::separation(pts));
    if (with_density) {
        json dens = json::array();
        for (const auto& rep : lfspec::density_profile(pts, pts, scale_lo, scale_hi))
            dens.push_back(lfspec::to_json(rep));
        out["density"] = dens;
    }
    emit(g, out);
    return 0;
}

int run_spectral_check(const GlobalOpts& g, const MeasureOpts& m, const std::string& spectrum,
                       const std::string& xi_list) {
    auto model = m.model();
    auto mu = m.build();
    auto lam = lfspec::parse_point_list(model, spectrum);
    std::vector<lfspec::Vec> samples;
    if (!xi_list.empty()) {
        samples = lfspec::parse_point_list(model, xi_list);
    } else if (model.kind == lfspec::FieldKind::Laurent) {
        throw lfspec::parse_error("--xi is required for Laurent-model measures");
    } else if (const auto* a = std::get_if<lfspec::AtomicMeasure>(&mu)) {
        // default: all residues of the smallest p-power lattice holding the
        // atoms and the spectrum (full proof for finite residue settings)
        long long level = 0;
        auto bump = [&](const lfspec::Vec& v) {
            auto e = v[0].abs_exp();
            if (e && *e > level) level = *e;
        };
        for (const auto& x : a->points) bump(x);
        for (const auto& l : lam) bump(l);
        samples = lfspec::all_residue_samples(m.p, level);
    } else {
        throw lfspec::parse_error("--xi is required for non-atomic measures");
    }
    auto verdict = lfspec::check_jp_criterion(mu, lfspec::CandidateSpectrum(lam), samples);
    json out = lfspec::verdict_to_json(verdict, samples);
    out["measure"] = lfspec::to_json(mu);
    emit(g, out);
    return verdict.orthogonal && verdict.complete_at_samples ? 0 : 1;
}

int run_hadamard(const GlobalOpts& g, long long p, const std::string& model_name,
                 const std::string& set, const std::string& spectrum) {
    auto model = model_name == "laurent" ? lfspec::FieldModel::laurent(p)
                                         : lfspec::FieldModel::padic(p);
    auto s_pts = lfspec::parse_point_list(model, set);
    auto l_pts = lfspec::parse_point_list(model, spectrum);
    auto r = lfspec::is_hadamard(s_pts, l_pts);
    json out;
    out["size"] = static_cast<long long>(s_pts.size());
    out["hadamard"] = r.hadamard;
    out["failing_rows"] = r.failing_rows
                              ? json(json::array({r.failing_rows->first, r.failing_rows->second}))
                              : json(nullptr);
    emit(g, out);
    return r.hadamard ? 0 : 1;
}

int run_triad(const GlobalOpts& g, long long p, long long n, const std::string& set,
              long long budget) {
    lfspec::ResidueSet T(p, n, lfspec::parse_residue_list(set));
    auto prof = lfspec::homogeneity_profile(T);
    auto tile = lfspec::find_tile_complement(T);
    auto spec = lfspec::find_spectrum_bruteforce(T, budget);
    json out;
    out["p"] = p;
    out["n"] = n;
    out["set"] = T.elems;
    out["homogeneous"] = prof.homogeneous;
    out["cards"] = prof.cards;
    if (tile) {
        lfspec::TileCertificate cert(T, *tile); // re-verify before reporting
        out["tile"] = json{{"complement", *tile}};
    } else {
        out["tile"] = nullptr;
    }
    if (spec) {
        lfspec::HadamardCertificate cert(T, *spec);
        out["spectrum"] = *spec;
    } else {
        out["spectrum"] = nullptr;
    }
    bool consistent = prof.homogeneous == tile.has_value() && tile.has_value() == spec.has_value();
    out["consistent"] = consistent;
    emit(g, out);
    return consistent ? 0 : 1;
}

int run_landau(const GlobalOpts& g, long long p, const std::string& omega,
               const std::string& delta, long long grid, bool properties) {
    auto model = lfspec::FieldModel::padic(p);
    lfspec::LandauProblem prob(lfspec::parse_compact_open(model, omega),
                               lfspec::parse_compact_open(model, delta));
    std::optional<long long> g2;
    if (grid != LLONG_MIN) g2 = grid;
    auto rep = lfspec::eigen_report(prob, g2);
    json out = lfspec::to_json(rep);
    bool ok = true;
    if (properties) {
        // canonical transforms: integer shift, p^{-1} shift, scale by p,
        // partition by balls (or by subdividing a single ball)
        long long a = prob.delta.scale();
        lfspec::CompactOpenSet delta1 = prob.delta, delta2 = prob.delta;
        if (prob.delta.ball_count() >= 2) {
            delta1 = lfspec::CompactOpenSet(a, {prob.delta.balls()[0]});
            std::vector<lfspec::Ball> rest(prob.delta.balls().begin() + 1, prob.delta.balls().end());
            delta2 = lfspec::CompactOpenSet(a, rest);
        } else {
            auto children = prob.delta.cell_centers(1 - a);
            std::vector<lfspec::Ball> first, rest;
            for (size_t i = 0; i < children.size(); ++i)
                (i == 0 ? first : rest).emplace_back(children[i], a - 1);
            delta1 = lfspec::CompactOpenSet(a - 1, first);
            delta2 = lfspec::CompactOpenSet(a - 1, rest);
        }
        lfspec::LandauTransforms tr{
            lfspec::Vec(lfspec::Element::from_integer(model, 1)),
            lfspec::Vec(lfspec::Element::from_rational(model, lfspec::Rational(1, p))),
            lfspec::Element::from_integer(model, p),
            delta1,
            delta2,
        };
        auto props = lfspec::verify_properties(prob, tr);
        out["properties"] = lfspec::to_json(props);
        ok = props.all();
    }
    emit(g, out);
    return ok ? 0 : 1;
}

int run_selfsimilar(const GlobalOpts& g, long long p, long long s, const std::string& digits,
                    long long depth) {
    lfspec::IfsSpec spec(p, s, lfspec::parse_residue_list(digits));
    json out;
    auto dim = lfspec::dimension(spec);
    out["p"] = p;
    out["s"] = s;
    out["digits"] = spec.digits;
    out["dimension"] = dim.exact ? lfspec::to_json(*dim.exact) : json(dim.value);
    json depths = json::array();
    bool ok = true;
    for (const auto& rep : lfspec::analyze(spec, depth)) {
        depths.push_back(lfspec::to_json(rep));
        ok = ok && rep.profile.homogeneous && rep.spectrum && rep.jp_complete &&
             rep.limit_orthogonal && rep.bessel_le_one;
    }
    out["depths"] = depths;
    emit(g, out);
    return ok ? 0 : 1;
}

int run_acceptance_cmd(const GlobalOpts& g, std::vector<int> criteria) {
    lfspec::AcceptanceOptions opt;
    opt.threads = g.threads;
    opt.criteria = std::move(criteria);
    auto results = lfspec::run_acceptance(opt, std::cerr);
    json out = json::array();
    bool ok = !results.empty();
    for (const auto& r : results) {
        json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        out.push_back(e);
        ok = ok && r.passed;
    }
    emit(g, out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral-measure computations on local fields"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--pretty", g.pretty, "indent JSON output");
    app.add_option("--out", g.out_path, "write JSON to a file instead of stdout");
    app.add_option("--threads", g.threads, "worker threads (default: hardware, env LFSPEC_THREADS)");
    if (const char* env = std::getenv("LFSPEC_THREADS")) g.threads = std::atoi(env);

    // ft
    MeasureOpts ft_m;
    std::string ft_xi;
    auto* ft = app.add_subcommand("ft", "exact Fourier transform values of a measure");
    ft_m.attach(ft);
    ft->add_option("--xi", ft_xi, "evaluation points")->required();

    // qlattice
    long long ql_p = 2, ql_radius = 3, ql_lo = 0, ql_hi = 0;
    std::string ql_model = "padic";
    bool ql_density = false;
    auto* ql = app.add_subcommand("qlattice", "standard quasi-lattice truncations");
    ql->add_option("--p", ql_p)->required();
    ql->add_option("--model", ql_model, "padic | laurent");
    ql->add_option("--radius", ql_radius, "truncation exponent n (points in B(0,p^n))");
    ql->add_flag("--density", ql_density, "emit per-scale density counts");
    ql->add_option("--scale-lo", ql_lo);
    ql->add_option("--scale-hi", ql_hi);

    // spectral-check
    MeasureOpts sc_m;
    std::string sc_spectrum, sc_xi;
    auto* sc = app.add_subcommand("spectral-check", "orthogonality + completeness criterion");
    sc_m.attach(sc);
    sc->add_option("--spectrum", sc_spectrum, "candidate spectrum points")->required();
    sc->add_option("--xi", sc_xi, "sample points (default: all residues, atomic measures only)");

    // hadamard
    long long h_p = 2;
    std::string h_model = "padic", h_set, h_spectrum;
    auto* hd = app.add_subcommand("hadamard", "exact complex Hadamard test for (chi(lambda s))");
    hd->add_option("--p", h_p)->required();
    hd->add_option("--model", h_model);
    hd->add_option("--set", h_set, "points s")->required();
    hd->add_option("--spectrum", h_spectrum, "points lambda")->required();

    // triad
    long long t_p = 2, t_n = 1, t_budget = 50'000'000;
    std::string t_set;
    auto* tr = app.add_subcommand("triad", "homogeneous / tile / spectral for T in Z/p^nZ");
    tr->add_option("--p", t_p)->required();
    tr->add_option("--n", t_n)->required();
    tr->add_option("--set", t_set)->required();
    tr->add_option("--budget", t_budget, "spectrum search node budget");

    // landau
    long long l_p = 2, l_grid = LLONG_MIN;
    std::string l_omega, l_delta;
    bool l_props = false;
    auto* ld = app.add_subcommand("landau", "Landau operator eigenvalues");
    ld->add_option("--p", l_p)->required();
    ld->add_option("--omega", l_omega, "time-side compact open set")->required();
    ld->add_option("--delta", l_delta, "frequency-side compact open set")->required();
    ld->add_option("--grid", l_grid, "cell scale m (default: minimal valid)");
    ld->add_flag("--properties", l_props, "run the invariance property suite");

    // selfsimilar
    long long ss_p = 2, ss_s = 3, ss_depth = 3;
    std::string ss_digits = "0,3,4,7";
    auto* ss = app.add_subcommand("selfsimilar", "IFS measure: cylinders, spectra, verification");
    ss->add_option("--p", ss_p)->required();
    ss->add_option("--s", ss_s)->required();
    ss->add_option("--digits", ss_digits)->required();
    ss->add_option("--depth", ss_depth);

    // acceptance
    std::vector<int> acc_criteria;
    auto* ac = app.add_subcommand("acceptance", "run the full verification suite");
    ac->add_option("--criterion", acc_criteria, "run only these criteria (1..10)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (ft->parsed()) return run_ft(g, ft_m, ft_xi);
        if (ql->parsed()) return run_qlattice(g, ql_p, ql_model, ql_radius, ql_density, ql_lo, ql_hi);
        if (sc->parsed()) return run_spectral_check(g, sc_m, sc_spectrum, sc_xi);
        if (hd->parsed()) return run_hadamard(g, h_p, h_model, h_set, h_spectrum);
        if (tr->parsed()) return run_triad(g, t_p, t_n, t_set, t_budget);
        if (ld->parsed()) return run_landau(g, l_p, l_omega, l_delta, l_grid, l_props);
        if (ss->parsed()) return run_selfsimilar(g, ss_p, ss_s, ss_digits, ss_depth);
        if (ac->parsed()) return run_acceptance_cmd(g, acc_criteria);
    } catch (const std::exception& e) {
        lfspec::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
