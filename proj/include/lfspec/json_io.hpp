#pragma once

#include <json.hpp>

#include "lfspec/landau.hpp"
#include "lfspec/quasilattice.hpp"
#include "lfspec/selfsimilar.hpp"
#include "lfspec/spectra.hpp"

namespace lfspec {

// Canonical JSON forms: rationals as reduced "a/b" strings (plain "a" for
// integers), certificate arrays sorted, key order fixed by
// construction so identical inputs give byte-identical output.
using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Element& e);
Element element_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j);

json to_json(const FourierValue& v);
FourierValue fourier_from_json(const json& j);

json to_json(const Measure& mu);
Measure measure_from_json(const json& j);

json to_json(const DensityReport& r);
DensityReport density_from_json(const json& j);

json verdict_to_json(const SpectralVerdict& v, const std::vector<Vec>& samples);
SpectralVerdict verdict_from_json(const json& j);

json to_json(const HomogeneityProfile& p);
HomogeneityProfile homogeneity_from_json(const json& j);

json to_json(const EigenReport& r);
EigenReport eigen_from_json(const json& j);

json to_json(const LandauPropertyReport& r);

json to_json(const DepthReport& r);

} // namespace lfspec
