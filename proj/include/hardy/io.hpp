#pragma once

#include <string>

#include <json.hpp>

#include "hardy/constructions.hpp"
#include "hardy/probelab.hpp"
#include "hardy/spaces.hpp"

namespace hardy {

using json = nlohmann::json;

// series files: {"degree": N, "re": [...], "im": [...]}; round-trips
// bit-exactly for finite doubles
json to_json(const PowerSeries<double>& f);
PowerSeries<double> series_from_json(const json& j);

// boundary samples: {"radius": r, "re": [...], "im": [...]}
json to_json(const BoundaryFunction<double>& u);
BoundaryFunction<double> boundary_from_json(const json& j);

// operator spec: {"n": n, "symbol": <series>, "a_re": [...], "a_im": [...]}
json to_json(const OperatorSpec<double>& spec);
OperatorSpec<double> operator_spec_from_json(const json& j);

json to_json(const NormEstimate<double>& est);
json to_json(const DecayProfile<double>& prof);
json to_json(const DegreeProfile<double>& prof);
json to_json(const FactorizationResult<double>& res);

json to_json(const OdeProblem<double>& prob);
OdeProblem<double> ode_problem_from_json(const json& j);

json to_json(const ProbeReport<double>& rep);
json to_json(const CompactnessReport<double>& rep);
json to_json(const ClassifyReport<double>& rep);
json to_json(const NecessityReport<double>& rep);
json to_json(const BatteryReport<double>& rep);

// RFC-4180 CSV emitters
std::string csv_escape(const std::string& field);
std::string decay_csv(const DecayProfile<double>& prof);
std::string battery_csv(const BatteryReport<double>& rep);

/// Per-angle G, G_k, S rows for plotting.
std::string angle_profile_csv(const PowerSeries<double>& f, double sigma, Index n_angles,
                              Index max_k = 3);

/// Serialize with sorted keys, 2-space indent, trailing newline; byte-stable
/// across runs for identical content.
std::string dump_report(const json& j);

/// Write text to path; throws std::runtime_error with the path on failure.
void write_text(const std::string& path, const std::string& text);

std::string read_text(const std::string& path);

}  // namespace hardy
