#include "hardy/io.hpp"

#include <fstream>
#include <sstream>

#include "hardy/paley.hpp"

namespace hardy {

namespace {

json complex_arrays(const VectorC<double>& v, const char* re_key, const char* im_key) {
    json j;
    auto& re = j[re_key] = json::array();
    auto& im = j[im_key] = json::array();
    for (Index k = 0; k < v.size(); ++k) {
        re.push_back(v[k].real());
        im.push_back(v[k].imag());
    }
    return j;
}

VectorC<double> complex_from_arrays(const json& j, const char* re_key, const char* im_key) {
    const auto& re = j.at(re_key);
    const auto& im = j.at(im_key);
    if (!re.is_array() || !im.is_array() || re.size() != im.size())
        throw BadParams("complex arrays must be equal-length");
    VectorC<double> v(static_cast<Index>(re.size()));
    for (Index k = 0; k < v.size(); ++k)
        v[k] = std::complex<double>(re[static_cast<std::size_t>(k)].get<double>(),
                                    im[static_cast<std::size_t>(k)].get<double>());
    return v;
}

json estimates_json(const std::vector<std::pair<std::string, double>>& estimates) {
    json j = json::array();
    for (const auto& [name, value] : estimates) j.push_back({{"name", name}, {"value", value}});
    return j;
}

}  // namespace

json to_json(const PowerSeries<double>& f) {
    json j = complex_arrays(f.coeffs, "re", "im");
    j["degree"] = f.degree();
    return j;
}

PowerSeries<double> series_from_json(const json& j) {
    VectorC<double> c = complex_from_arrays(j, "re", "im");
    if (j.contains("degree") && j.at("degree").get<Index>() != c.size() - 1)
        throw BadParams("series file: degree does not match coefficient count");
    PowerSeries<double> f(std::move(c));
    if (!f.all_finite()) throw BadParams("series file: coefficients must be finite");
    return f;
}

json to_json(const BoundaryFunction<double>& u) {
    json j = complex_arrays(u.samples, "re", "im");
    j["radius"] = u.radius;
    return j;
}

BoundaryFunction<double> boundary_from_json(const json& j) {
    BoundaryFunction<double> u;
    u.radius = j.at("radius").get<double>();
    u.samples = complex_from_arrays(j, "re", "im");
    if (!(u.radius > 0 && u.radius <= 1) || u.size() < 1)
        throw BadParams("boundary file: need 0 < radius <= 1 and at least one sample");
    return u;
}

json to_json(const OperatorSpec<double>& spec) {
    json j = complex_arrays(spec.a, "a_re", "a_im");
    j["a0"] = 1.0;  // fixed leading coefficient of the f g^(n) term
    j["n"] = spec.n;
    j["symbol"] = to_json(spec.g);
    return j;
}

OperatorSpec<double> operator_spec_from_json(const json& j) {
    return OperatorSpec<double>(j.at("n").get<Index>(), series_from_json(j.at("symbol")),
                                complex_from_arrays(j, "a_re", "a_im"));
}

json to_json(const NormEstimate<double>& est) {
    return json{{"value", est.value},
                {"truncation_degree", est.truncation_degree},
                {"grid", est.grid_descriptor},
                {"converged", est.converged}};
}

json to_json(const DecayProfile<double>& prof) {
    json radii = json::array(), values = json::array();
    for (Index i = 0; i < prof.radii.size(); ++i) {
        radii.push_back(prof.radii[i]);
        values.push_back(prof.values[i]);
    }
    return json{{"radii", radii}, {"values", values}};
}

json to_json(const DegreeProfile<double>& prof) {
    json degrees = json::array(), values = json::array();
    for (std::size_t i = 0; i < prof.degrees.size(); ++i) {
        degrees.push_back(prof.degrees[i]);
        values.push_back(prof.values[static_cast<Index>(i)]);
    }
    return json{{"degrees", degrees}, {"values", values}};
}

json to_json(const FactorizationResult<double>& res) {
    return json{{"F", to_json(res.F)},
                {"G_n", to_json(res.G_n)},
                {"residual_sup", res.residual_sup},
                {"zero_order", res.zero_order}};
}

json to_json(const OdeProblem<double>& prob) {
    json g = json::array();
    for (const auto& gi : prob.g) g.push_back(to_json(gi));
    json j = complex_arrays(prob.init, "init_re", "init_im");
    j["n"] = prob.n;
    j["G"] = to_json(prob.G);
    j["g"] = g;
    j["f0"] = to_json(prob.f0);
    return j;
}

OdeProblem<double> ode_problem_from_json(const json& j) {
    OdeProblem<double> prob;
    prob.n = j.at("n").get<Index>();
    prob.G = series_from_json(j.at("G"));
    for (const auto& gi : j.at("g")) prob.g.push_back(series_from_json(gi));
    prob.f0 = series_from_json(j.at("f0"));
    prob.init = complex_from_arrays(j, "init_re", "init_im");
    prob.validate();
    return prob;
}

json to_json(const ProbeReport<double>& rep) {
    json sup = json::array(), points = json::array(), degrees = json::array();
    for (Index i = 0; i < rep.sup_per_degree.size(); ++i) sup.push_back(rep.sup_per_degree[i]);
    for (const auto& pt : rep.per_point) points.push_back({{"point", pt.label}, {"ratio", pt.ratio}});
    for (Index d : rep.degrees) degrees.push_back(d);
    json j = complex_arrays(rep.a, "a_re", "a_im");
    j["a0"] = 1.0;
    j["symbol"] = rep.symbol;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["family"] = rep.family;
    j["grid"] = rep.grid;
    j["degrees"] = degrees;
    j["sup_per_degree"] = sup;
    j["sup_ratio"] = rep.sup_ratio;
    j["per_point"] = points;
    j["verdict"] = rep.verdict;
    j["max_tail_coeff"] = rep.max_tail_coeff;
    j["seed"] = rep.seed;
    return j;
}

json to_json(const CompactnessReport<double>& rep) {
    json radii = json::array(), norms = json::array();
    for (Index i = 0; i < rep.radii.size(); ++i) {
        radii.push_back(rep.radii[i]);
        norms.push_back(rep.norms[i]);
    }
    return json{{"radii", radii}, {"norms", norms}, {"verdict", rep.verdict}};
}

json to_json(const ClassifyReport<double>& rep) {
    json j = complex_arrays(rep.a, "a_re", "a_im");
    j["a0"] = 1.0;
    j["symbol"] = rep.symbol;
    j["n"] = rep.n;
    j["p"] = rep.p;
    j["q"] = rep.q;
    j["alpha"] = rep.alpha;
    j["k_last"] = rep.k_last;
    j["branch"] = rep.branch;
    j["estimator"] = rep.estimator;
    j["grid"] = rep.grid;
    j["estimates"] = estimates_json(rep.estimates);
    j["prediction"] = rep.prediction;
    j["notes"] = rep.notes;
    return j;
}

json to_json(const NecessityReport<double>& rep) {
    json active = json::array();
    for (Index k : rep.active_k) active.push_back(k);
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json c_inputs = json::array(), bounds = json::array();
        for (Index i = 0; i < row.c_inputs.size(); ++i) c_inputs.push_back(row.c_inputs[i]);
        for (Index i = 0; i < row.bounds.size(); ++i) bounds.push_back(row.bounds[i]);
        rows.push_back({{"lambda_re", row.lambda.real()},
                        {"lambda_im", row.lambda.imag()},
                        {"c_inputs", c_inputs},
                        {"bounds", bounds}});
    }
    json sup = json::array();
    for (Index i = 0; i < rep.sup_bounds.size(); ++i) sup.push_back(rep.sup_bounds[i]);
    return json{{"active_k", active},
                {"rows", rows},
                {"sup_bounds", sup},
                {"max_condition", rep.max_condition}};
}

json to_json(const BatteryReport<double>& rep) {
    json degrees = json::array();
    for (Index d : rep.degrees) degrees.push_back(d);
    json cells = json::array();
    for (const auto& cell : rep.cells) {
        json c = complex_arrays(cell.scenario.a, "a_re", "a_im");
        c["symbol"] = cell.symbol;
        c["p"] = cell.scenario.p;
        c["q"] = cell.scenario.q;
        c["n"] = cell.scenario.n;
        if (cell.error.empty()) {
            c["classify"] = to_json(cell.classify);
            c["probe"] = to_json(cell.probe);
            c["compactness"] = to_json(cell.compactness);
        } else {
            c["error"] = cell.error;
        }
        cells.push_back(std::move(c));
    }
    return json{{"degrees", degrees}, {"seed", rep.seed}, {"cells", cells}};
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string csv_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string decay_csv(const DecayProfile<double>& prof) {
    std::string out = "radius,value\n";
    for (Index i = 0; i < prof.radii.size(); ++i)
        out += csv_num(prof.radii[i]) + "," + csv_num(prof.values[i]) + "\n";
    return out;
}

std::string battery_csv(const BatteryReport<double>& rep) {
    std::string out =
        "symbol,p,q,n,a,degree,sup_ratio,probe_verdict,classify_branch,classify_prediction,"
        "compactness_verdict,error\n";
    for (const auto& cell : rep.cells) {
        std::string a_text;
        for (Index i = 0; i < cell.scenario.a.size(); ++i) {
            if (i) a_text += ";";
            a_text += csv_num(cell.scenario.a[i].real()) + "+" + csv_num(cell.scenario.a[i].imag()) + "i";
        }
        const std::string prefix = csv_escape(cell.symbol) + "," + csv_num(cell.scenario.p) + "," +
                                   csv_num(cell.scenario.q) + "," + std::to_string(cell.scenario.n) +
                                   "," + csv_escape(a_text) + ",";
        if (!cell.error.empty()) {
            out += prefix + ",,,,,," + csv_escape(cell.error) + "\n";
            continue;
        }
        for (Index di = 0; di < static_cast<Index>(cell.probe.degrees.size()); ++di) {
            out += prefix + std::to_string(cell.probe.degrees[static_cast<std::size_t>(di)]) + "," +
                   csv_num(cell.probe.sup_per_degree[di]) + "," + csv_escape(cell.probe.verdict) +
                   "," + csv_escape(cell.classify.branch) + "," +
                   csv_escape(cell.classify.prediction) + "," +
                   csv_escape(cell.compactness.verdict) + ",\n";
        }
    }
    return out;
}

std::string angle_profile_csv(const PowerSeries<double>& f, double sigma, Index n_angles,
                              Index max_k) {
    const RadialQuad<double> quad = radial_quad<double>(gk_node_count<double>(f.degree(), max_k));
    const DiscQuad<double> quad2d =
        disc_quad<double>(std::max<Index>(64, f.degree() / 2 + 8),
                          std::max<Index>(256, 2 * f.degree() + 2));
    std::string out = "theta,G";
    for (Index k = 2; k <= max_k; ++k) out += ",G" + std::to_string(k);
    out += ",S\n";
    for (Index j = 0; j < n_angles; ++j) {
        const double theta = 2 * pi_v<double> * static_cast<double>(j) / static_cast<double>(n_angles);
        out += csv_num(theta) + "," + csv_num(g_function(f, theta, quad));
        for (Index k = 2; k <= max_k; ++k) out += "," + csv_num(gk_function(f, k, theta, quad));
        out += "," + csv_num(lusin_area(f, StolzAngle<double>{theta, sigma}, quad2d)) + "\n";
    }
    return out;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << text;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

}  // namespace hardy
