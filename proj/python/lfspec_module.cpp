// Python bindings: thin wrappers over the C++ core. Point and set inputs
// use the same textual grammar as the CLI; reports come back as plain
// Python dicts/lists mirroring the JSON reports.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lfspec/acceptance.hpp"
#include "lfspec/json_io.hpp"
#include "lfspec/parse.hpp"

namespace py = pybind11;
using lfspec::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

lfspec::FieldModel make_model(long long p, const std::string& model) {
    if (model == "padic") return lfspec::FieldModel::padic(p);
    if (model == "laurent") return lfspec::FieldModel::laurent(p);
    throw std::invalid_argument("model must be 'padic' or 'laurent'");
}

lfspec::Measure make_atoms(long long p, const std::string& model, const std::string& atoms,
                           const std::string& weights) {
    auto m = make_model(p, model);
    auto pts = lfspec::parse_point_list(m, atoms);
    if (weights.empty()) return lfspec::AtomicMeasure::uniform(pts);
    std::vector<lfspec::Rational> w;
    for (const auto& s : lfspec::split_top_level(weights, ",;"))
        w.push_back(lfspec::parse_rational(s));
    return lfspec::AtomicMeasure(pts, w);
}

py::object ft_values(const lfspec::Measure& mu, const lfspec::FieldModel& model,
                     const std::string& xi) {
    json values = json::array();
    for (const auto& x : lfspec::parse_point_list(model, xi)) {
        auto v = lfspec::mu_hat(mu, x);
        json e;
        e["xi"] = lfspec::to_json(x);
        e["value"] = lfspec::to_json(v);
        e["in_zero_set"] = v.is_zero();
        values.push_back(e);
    }
    return json_to_py(values);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact spectral-measure computations on Q_p and F_p((T))";

    m.def("ft_atoms",
          [](long long p, const std::string& atoms, const std::string& xi,
             const std::string& weights, const std::string& model) {
              return ft_values(make_atoms(p, model, atoms, weights), make_model(p, model), xi);
          },
          py::arg("p"), py::arg("atoms"), py::arg("xi"), py::arg("weights") = "",
          py::arg("model") = "padic",
          "Fourier transform of an atomic measure at the given points");

    m.def("ft_uniform",
          [](long long p, const std::string& set_expr, const std::string& xi,
             const std::string& model) {
              auto md = make_model(p, model);
              lfspec::Measure mu = lfspec::UniformMeasure(lfspec::parse_compact_open(md, set_expr));
              return ft_values(mu, md, xi);
          },
          py::arg("p"), py::arg("set"), py::arg("xi"), py::arg("model") = "padic",
          "Fourier transform of a normalized compact-open restriction");

    m.def("ft_selfsimilar",
          [](long long p, long long s, const std::vector<long long>& digits,
             const std::string& xi) {
              auto md = lfspec::FieldModel::padic(p);
              lfspec::Measure mu = lfspec::SelfSimilarMeasure(md, s, digits);
              return ft_values(mu, md, xi);
          },
          py::arg("p"), py::arg("s"), py::arg("digits"), py::arg("xi"),
          "Fourier transform of the IFS-invariant measure");

    m.def("spectral_check",
          [](long long p, const std::string& atoms, const std::string& spectrum,
             const std::string& xi, const std::string& weights, const std::string& model) {
              auto md = make_model(p, model);
              auto mu = make_atoms(p, model, atoms, weights);
              auto lam = lfspec::parse_point_list(md, spectrum);
              std::vector<lfspec::Vec> samples;
              if (!xi.empty()) {
                  samples = lfspec::parse_point_list(md, xi);
              } else if (md.kind == lfspec::FieldKind::Laurent) {
                  throw std::invalid_argument("xi is required for Laurent-model measures");
              } else {
                  long long level = 0;
                  auto bump = [&](const lfspec::Vec& v) {
                      auto e = v[0].abs_exp();
                      if (e && *e > level) level = *e;
                  };
                  for (const auto& x : std::get<lfspec::AtomicMeasure>(mu).points) bump(x);
                  for (const auto& l : lam) bump(l);
                  samples = lfspec::all_residue_samples(p, level);
              }
              auto verdict =
                  lfspec::check_jp_criterion(mu, lfspec::CandidateSpectrum(lam), samples);
              return json_to_py(lfspec::verdict_to_json(verdict, samples));
          },
          py::arg("p"), py::arg("atoms"), py::arg("spectrum"), py::arg("xi") = "",
          py::arg("weights") = "", py::arg("model") = "padic",
          "orthogonality and the completeness criterion for an atomic measure");

    m.def("hadamard",
          [](long long p, const std::string& set, const std::string& spectrum,
             const std::string& model) {
              auto md = make_model(p, model);
              auto r = lfspec::is_hadamard(lfspec::parse_point_list(md, set),
                                           lfspec::parse_point_list(md, spectrum));
              return py::make_tuple(r.hadamard,
                                    r.failing_rows
                                        ? py::object(py::make_tuple(r.failing_rows->first,
                                                                    r.failing_rows->second))
                                        : py::object(py::none()));
          },
          py::arg("p"), py::arg("set"), py::arg("spectrum"), py::arg("model") = "padic",
          "exact complex Hadamard test; returns (ok, failing_row_pair)");

    m.def("triad",
          [](long long p, long long n, const std::vector<long long>& set, long long budget) {
              lfspec::ResidueSet T(p, n, set);
              auto prof = lfspec::homogeneity_profile(T);
              auto tile = lfspec::find_tile_complement(T);
              auto spec = lfspec::find_spectrum_bruteforce(T, budget);
              json out;
              out["p"] = p;
              out["n"] = n;
              out["set"] = T.elems;
              out["homogeneous"] = prof.homogeneous;
              out["cards"] = prof.cards;
              out["tile"] = tile ? json{{"complement", *tile}} : json(nullptr);
              out["spectrum"] = spec ? json(*spec) : json(nullptr);
              out["consistent"] =
                  prof.homogeneous == tile.has_value() && tile.has_value() == spec.has_value();
              return json_to_py(out);
          },
          py::arg("p"), py::arg("n"), py::arg("set"), py::arg("budget") = 50'000'000,
          "homogeneity / tile / spectrum for T in Z/p^nZ");

    m.def("frame_bounds",
          [](long long p, const std::string& atoms, const std::string& spectrum,
             const std::string& weights, const std::string& model) {
              auto md = make_model(p, model);
              auto mu = std::get<lfspec::AtomicMeasure>(make_atoms(p, model, atoms, weights));
              auto [a, b] = lfspec::frame_bounds(mu, lfspec::parse_point_list(md, spectrum));
              return py::make_tuple(a, b);
          },
          py::arg("p"), py::arg("atoms"), py::arg("spectrum"), py::arg("weights") = "",
          py::arg("model") = "padic", "lower and upper frame bounds (A, B)");

    m.def("landau",
          [](long long p, const std::string& omega, const std::string& delta) {
              auto md = lfspec::FieldModel::padic(p);
              lfspec::LandauProblem prob(lfspec::parse_compact_open(md, omega),
                                         lfspec::parse_compact_open(md, delta));
              return json_to_py(lfspec::to_json(lfspec::eigen_report(prob)));
          },
          py::arg("p"), py::arg("omega"), py::arg("delta"),
          "Landau operator eigenvalue report");

    m.def("selfsimilar",
          [](long long p, long long s, const std::vector<long long>& digits, long long depth) {
              lfspec::IfsSpec spec(p, s, digits);
              json out;
              auto dim = lfspec::dimension(spec);
              out["dimension"] = dim.exact ? lfspec::to_json(*dim.exact) : json(dim.value);
              json depths = json::array();
              for (const auto& rep : lfspec::analyze(spec, depth))
                  depths.push_back(lfspec::to_json(rep));
              out["depths"] = depths;
              return json_to_py(out);
          },
          py::arg("p"), py::arg("s"), py::arg("digits"), py::arg("depth") = 2,
          "cylinders, truncated spectra and verification per depth");

    m.def("qlattice",
          [](long long p, long long radius, const std::string& model) {
              auto md = make_model(p, model);
              lfspec::QuasiLattice L(md);
              auto pts = L.enumerate(radius);
              json out;
              out["count"] = static_cast<long long>(pts.size());
              if (pts.size() >= 2) out["separation"] = lfspec::to_json(lfspec::separation(pts));
              json jp = json::array();
              for (const auto& x : pts) jp.push_back(lfspec::to_json(x));
              out["points"] = jp;
              return json_to_py(out);
          },
          py::arg("p"), py::arg("radius"), py::arg("model") = "padic",
          "standard quasi-lattice truncation");

    m.def("double_integral",
          [](long long p, long long a, long long b) {
              return py::make_tuple(lfspec::double_integral_closed(p, a, b).str(),
                                    lfspec::double_integral_cells(p, a, b).str());
          },
          py::arg("p"), py::arg("a"), py::arg("b"),
          "(closed form, exact cell summation) of the ball-transform double integral");

    m.def("acceptance",
          [](const std::vector<int>& criteria, unsigned threads) {
              lfspec::AcceptanceOptions opt;
              opt.criteria = criteria;
              opt.threads = threads;
              std::ostringstream log;
              auto results = lfspec::run_acceptance(opt, log);
              py::list out;
              for (const auto& r : results) {
                  py::dict e;
                  e["id"] = r.id;
                  e["name"] = r.name;
                  e["passed"] = r.passed;
                  e["detail"] = r.detail;
                  out.append(e);
              }
              return out;
          },
          py::arg("criteria") = std::vector<int>{}, py::arg("threads") = 0,
          "run acceptance criteria (all by default)");
}
