#include "lfspec/json_io.hpp"

namespace lfspec {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json to_json(const Element& e) {
    json j;
    j["kind"] = e.model().kind == FieldKind::PAdic ? "padic" : "laurent";
    j["p"] = e.model().p;
    if (e.is_zero()) {
        j["zero"] = true;
    } else {
        j["v"] = e.valuation();
        std::vector<int> digits;
        for (long long i = e.valuation(); i < e.prec(); ++i) digits.push_back(e.digit_at(i));
        while (digits.size() > 1 && digits.back() == 0) digits.pop_back(); // implied by prec
        j["digits"] = digits;
    }
    j["prec"] = e.prec();
    return j;
}

Element element_from_json(const json& j) {
    FieldModel model = j.at("kind").get<std::string>() == "padic"
                           ? FieldModel::padic(j.at("p").get<long long>())
                           : FieldModel::laurent(j.at("p").get<long long>());
    long long prec = j.at("prec").get<long long>();
    if (j.contains("zero") && j["zero"].get<bool>()) return Element::zero(model, prec);
    return Element::from_digits(model, j.at("v").get<long long>(),
                                j.at("digits").get<std::vector<int>>(), prec);
}

json to_json(const Vec& v) {
    if (v.dim() == 1) return to_json(v[0]);
    json arr = json::array();
    for (size_t i = 0; i < v.dim(); ++i) arr.push_back(to_json(v[i]));
    return arr;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) return Vec(element_from_json(j));
    std::vector<Element> comps;
    for (const auto& c : j) comps.push_back(element_from_json(c));
    return Vec(std::move(comps));
}

json to_json(const FourierValue& v) {
    json j;
    j["scalar"] = to_json(v.scalar);
    j["level"] = v.phases.level();
    json phases = json::array();
    for (const auto& [k, c] : v.phases.reduced_terms())
        phases.push_back(json::array({k, v.phases.level(), to_json(c)}));
    j["phases"] = phases;
    auto z = v.to_complex();
    j["float_approx"] = json::array({z.real(), z.imag()});
    j["p"] = v.phases.p();
    return j;
}

FourierValue fourier_from_json(const json& j) {
    long long p = j.at("p").get<long long>();
    long long level = j.at("level").get<long long>();
    CyclotomicSum sum(p, level);
    for (const auto& t : j.at("phases"))
        sum.add_term(t.at(0).get<long long>(), rational_from_json(t.at(2)));
    return FourierValue(rational_from_json(j.at("scalar")), sum);
}

json to_json(const Measure& mu) {
    json j;
    if (const auto* a = std::get_if<AtomicMeasure>(&mu)) {
        j["type"] = "atomic";
        json pts = json::array(), ws = json::array();
        for (const auto& x : a->points) pts.push_back(to_json(x));
        for (const auto& w : a->weights) ws.push_back(to_json(w));
        j["points"] = pts;
        j["weights"] = ws;
    } else if (const auto* u = std::get_if<UniformMeasure>(&mu)) {
        j["type"] = "uniform";
        j["scale"] = u->set.scale();
        json centers = json::array();
        for (const auto& b : u->set.balls()) centers.push_back(to_json(b.center));
        j["centers"] = centers;
    } else {
        const auto& s = std::get<SelfSimilarMeasure>(mu);
        j["type"] = "selfsimilar";
        j["p"] = s.model.p;
        j["s"] = s.ratio_exp;
        j["digits"] = s.digits;
    }
    return j;
}

Measure measure_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "atomic") {
        std::vector<Vec> pts;
        std::vector<Rational> ws;
        for (const auto& x : j.at("points")) pts.push_back(vec_from_json(x));
        for (const auto& w : j.at("weights")) ws.push_back(rational_from_json(w));
        return AtomicMeasure(std::move(pts), std::move(ws));
    }
    if (type == "uniform") {
        long long scale = j.at("scale").get<long long>();
        std::vector<Ball> balls;
        for (const auto& c : j.at("centers")) balls.emplace_back(vec_from_json(c), scale);
        return UniformMeasure(CompactOpenSet(scale, std::move(balls)));
    }
    if (type == "selfsimilar") {
        return SelfSimilarMeasure(FieldModel::padic(j.at("p").get<long long>()),
                                  j.at("s").get<long long>(),
                                  j.at("digits").get<std::vector<long long>>());
    }
    throw std::invalid_argument("measure_from_json: unknown type " + type);
}

json to_json(const DensityReport& r) {
    json j;
    j["scale"] = r.scale;
    j["sup_count"] = r.sup_count;
    j["inf_count"] = r.inf_count;
    j["upper_density"] = to_json(r.upper_density);
    j["lower_density"] = to_json(r.lower_density);
    return j;
}

DensityReport density_from_json(const json& j) {
    DensityReport r;
    r.scale = j.at("scale").get<long long>();
    r.sup_count = j.at("sup_count").get<long long>();
    r.inf_count = j.at("inf_count").get<long long>();
    r.upper_density = rational_from_json(j.at("upper_density"));
    r.lower_density = rational_from_json(j.at("lower_density"));
    return r;
}

json verdict_to_json(const SpectralVerdict& v, const std::vector<Vec>& samples) {
    json j;
    j["orthogonal"] = v.orthogonal;
    j["complete_at_samples"] = v.complete_at_samples;
    json sums = json::array();
    for (const auto& s : v.sums) {
        json e;
        e["xi"] = s.sample_index < samples.size() ? to_json(samples[s.sample_index]) : json(nullptr);
        e["value"] = s.value ? to_json(*s.value) : json(nullptr);
        e["approx"] = s.approx;
        e["matches_target"] = s.matches_target;
        sums.push_back(e);
    }
    j["sums"] = sums;
    json witnesses;
    witnesses["failing_pair"] =
        v.failing_pair ? json::array({v.failing_pair->first, v.failing_pair->second}) : json(nullptr);
    witnesses["failing_sample"] = v.failing_sample ? json(*v.failing_sample) : json(nullptr);
    j["witnesses"] = witnesses;
    return j;
}

SpectralVerdict verdict_from_json(const json& j) {
    SpectralVerdict v;
    v.orthogonal = j.at("orthogonal").get<bool>();
    v.complete_at_samples = j.at("complete_at_samples").get<bool>();
    size_t idx = 0;
    for (const auto& s : j.at("sums")) {
        CriterionSum cs;
        cs.sample_index = idx++;
        if (!s.at("value").is_null()) cs.value = rational_from_json(s.at("value"));
        cs.approx = s.at("approx").get<double>();
        cs.matches_target = s.at("matches_target").get<bool>();
        v.sums.push_back(cs);
    }
    const auto& w = j.at("witnesses");
    if (!w.at("failing_pair").is_null())
        v.failing_pair = std::make_pair(w["failing_pair"][0].get<size_t>(),
                                        w["failing_pair"][1].get<size_t>());
    if (!w.at("failing_sample").is_null()) v.failing_sample = w["failing_sample"].get<size_t>();
    return v;
}

json to_json(const HomogeneityProfile& p) {
    json j;
    j["p"] = p.p;
    j["n"] = p.n;
    j["cards"] = p.cards;
    j["exponents"] = p.exponents;
    j["homogeneous"] = p.homogeneous;
    return j;
}

HomogeneityProfile homogeneity_from_json(const json& j) {
    HomogeneityProfile p;
    p.p = j.at("p").get<long long>();
    p.n = j.at("n").get<long long>();
    p.cards = j.at("cards").get<std::vector<long long>>();
    p.exponents = j.at("exponents").get<std::vector<long long>>();
    p.homogeneous = j.at("homogeneous").get<bool>();
    return p;
}

json to_json(const EigenReport& r) {
    json j;
    j["eigenvalues"] = r.eigenvalues;
    j["multiplicity_of_one"] = r.multiplicity_of_one;
    j["trace"] = to_json(r.trace);
    j["frobenius_sq"] = to_json(r.frobenius_sq);
    j["grid_scale"] = r.grid_scale;
    j["tolerance"] = r.tolerance;
    return j;
}

EigenReport eigen_from_json(const json& j) {
    EigenReport r;
    r.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    r.multiplicity_of_one = j.at("multiplicity_of_one").get<long long>();
    r.trace = rational_from_json(j.at("trace"));
    r.frobenius_sq = rational_from_json(j.at("frobenius_sq"));
    r.grid_scale = j.at("grid_scale").get<long long>();
    r.tolerance = j.at("tolerance").get<double>();
    return r;
}

json to_json(const LandauPropertyReport& r) {
    json j;
    j["translation"] = r.translation;
    j["scaling"] = r.scaling;
    j["symmetry"] = r.symmetry;
    j["monotonicity"] = r.monotonicity;
    j["trace_identity"] = r.trace_identity;
    j["frobenius_identity"] = r.frobenius_identity;
    j["superadditivity"] = r.superadditivity;
    j["all"] = r.all();
    return j;
}

json to_json(const DepthReport& r) {
    json j;
    j["depth"] = r.depth;
    j["cylinder_size"] = static_cast<long long>(r.cylinder.size());
    j["cylinder"] = r.cylinder;
    j["homogeneous"] = r.profile.homogeneous;
    j["cards"] = r.profile.cards;
    j["spectrum"] = r.spectrum ? json(*r.spectrum) : json(nullptr);
    json verdict;
    verdict["jp_complete"] = r.jp_complete;
    verdict["limit_orthogonal"] = r.limit_orthogonal;
    verdict["bessel_le_one"] = r.bessel_le_one;
    verdict["min_partial_sum"] = r.min_partial_sum;
    verdict["max_partial_sum"] = r.max_partial_sum;
    j["verdict"] = verdict;
    return j;
}

} // namespace lfspec
