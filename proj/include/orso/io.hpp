#pragma once

#include <string>

#include "json.hpp"
#include "orso/gates.hpp"
#include "orso/modulus.hpp"
#include "orso/norms.hpp"
#include "orso/trial.hpp"
#include "orso/young.hpp"

namespace orso::io {

using nlohmann::json;

// JSON descriptors: {"kind": "power", "p": 2}, {"kind": "power_log", ...},
// {"kind": "exponential", ...}, {"kind": "linfty_gauge"},
// {"kind": "conjugate", "of": {...}}, {"kind": "tabulated", ...}.
json young_to_json(const young::YoungFunction& a);
young::YoungFunction young_from_json(const json& j);

// CLI mini-language: power:p=2 | powerlog:p0=..,alpha0=..,p=..,alpha=..
// | exp:gamma0=..,gamma=.. | linfty | table:path=FILE
young::YoungFunction young_from_spec(const std::string& spec);

// Tabulated Young functions round-trip as CSV (t,value) plus a JSON sidecar
// with the tail models when written through these helpers.
young::YoungFunction young_from_csv(const std::string& path);
void young_to_csv(const young::YoungFunction& a, const std::string& path);

json report_to_json(const gates::ConvergenceReport& rep);
json report_to_json(const modulus::EquivalenceReport& rep);
json report_to_json(const norms::NormResult& res);
json report_to_json(const trial::Estimate& est);
json classification_to_json(const modulus::EmbeddingClassification& cls);

}  // namespace orso::io
