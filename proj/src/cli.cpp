#include "hardy/cli.hpp"

#include <cstdio>
#include <filesystem>

#include <CLI11.hpp>

#include "hardy/io.hpp"
#include "hardy/verify.hpp"

namespace hardy {

namespace {

json meta_json(const RunConfig& config) {
    return json{{"version", kVersion},
                {"command", config.command},
                {"seed", config.seed},
                {"degree", config.degree},
                {"samples", config.samples},
                {"format", config.format}};
}

void emit(const RunConfig& config, const json& body, const std::string& csv = "") {
    if (config.out.empty()) return;
    if (config.format == "csv" && !csv.empty()) {
        write_text(config.out, csv);
    } else {
        json j = body;
        j["meta"] = meta_json(config);
        write_text(config.out, dump_report(j));
    }
}

VectorC<double> coefficients(const RunConfig& config) {
    VectorC<double> a(static_cast<Index>(config.a_re.size()));
    for (Index i = 0; i < a.size(); ++i) {
        const double im =
            i < static_cast<Index>(config.a_im.size()) ? config.a_im[static_cast<std::size_t>(i)] : 0.0;
        a[i] = std::complex<double>(config.a_re[static_cast<std::size_t>(i)], im);
    }
    return a;
}

Symbol<double> resolve_symbol(const RunConfig& config) {
    if (!config.symbol_file.empty()) {
        const json j = json::parse(read_text(config.symbol_file));
        return symbol_from_series(std::filesystem::path(config.symbol_file).stem().string(),
                                  series_from_json(j));
    }
    if (config.symbol.empty()) throw BadParams("need --symbol NAME or --symbol-file PATH");
    return make_symbol<double>(config.symbol);
}

int run_verify(const RunConfig& config) {
    const auto suites = run_suites(config.suite, config.seed);
    bool all_pass = true;
    json jsuites = json::array();
    for (const auto& s : suites) {
        all_pass = all_pass && s.pass;
        std::printf("suite %-10s : %s (%ld cases, worst err/tol %.3g)\n", s.name.c_str(),
                    s.pass ? "PASS" : "FAIL", s.cases, s.max_err);
        jsuites.push_back({{"name", s.name},
                           {"pass", s.pass},
                           {"cases", s.cases},
                           {"max_err_over_tol", s.max_err},
                           {"detail", s.detail}});
    }
    emit(config, json{{"suites", jsuites}});
    return all_pass ? 0 : 1;
}

int run_probe(const RunConfig& config) {
    const Symbol<double> symbol = resolve_symbol(config);
    const VectorC<double> a = coefficients(config);
    const std::vector<std::complex<double>> lambdas = DiscGrid<double>{4, 16, true}.points();
    std::vector<Index> degrees;
    for (Index d = std::max<Index>(16, config.degree / 4); d < config.degree; d *= 2)
        degrees.push_back(d);
    degrees.push_back(config.degree);
    const auto rep = boundedness_probe(symbol, config.n, a, config.p, config.q, lambdas,
                                       default_gammas(config.p), degrees, config.seed);
    std::printf("probe %s: verdict=%s sup_ratio=%.6g over %zu degrees\n", rep.symbol.c_str(),
                rep.verdict.c_str(), rep.sup_ratio, rep.degrees.size());
    emit(config, to_json(rep));
    return 0;
}

int run_classify(const RunConfig& config) {
    const Symbol<double> symbol = resolve_symbol(config);
    ClassifyOptions opt;
    opt.base_degree = config.degree;
    opt.garsia_samples = config.samples;
    const auto rep = classify_symbol(symbol, config.n, coefficients(config), config.p, config.q, opt);
    std::printf("classify %s: branch=%s prediction=%s (%s)\n", rep.symbol.c_str(),
                rep.branch.c_str(), rep.prediction.c_str(), rep.estimator.c_str());
    if (!config.angles_csv.empty())
        write_text(config.angles_csv,
                   angle_profile_csv(symbol.gen(config.degree), 0.5, 64));
    emit(config, to_json(rep));
    return 0;
}

int run_factorize(const RunConfig& config) {
    const json j = json::parse(read_text(config.input));
    const PowerSeries<double> f = series_from_json(j);
    const auto res = factor_derivative(f, config.p, config.n, config.samples, config.degree);

    const PowerSeries<double> fn = derivative(f, config.n);
    double scale = 0;
    for (const auto& z : factor_report_points<double>())
        scale = std::max(scale, std::abs(eval(fn, z)));
    const bool ok = res.residual_sup <= 1e-6 * scale + 1e-12 * std::max(1.0, f.max_abs());
    std::printf("factorize n=%lld p=%g: residual_sup=%.3g (scale %.3g) %s\n",
                static_cast<long long>(config.n), config.p, res.residual_sup, scale,
                ok ? "PASS" : "FAIL");
    emit(config, to_json(res));
    return ok ? 0 : 1;
}

int run_ode(const RunConfig& config) {
    const json j = json::parse(read_text(config.input));
    const OdeProblem<double> prob = ode_problem_from_json(j);
    const PowerSeries<double> f = solve_ode(prob, config.degree);
    const PowerSeries<double> res = ode_residual(prob, f);
    double worst = 0;
    for (Index k = 0; k + prob.n <= config.degree; ++k)
        worst = std::max(worst, std::abs(res.coeff(k)));
    const double scale = std::max({1.0, prob.G.max_abs(), prob.f0.max_abs()});
    const bool ok = worst <= 1e-11 * scale;
    std::printf("ode n=%lld degree=%lld: residual=%.3g %s\n", static_cast<long long>(prob.n),
                static_cast<long long>(config.degree), worst, ok ? "PASS" : "FAIL");
    json body{{"solution", to_json(f)}, {"residual_max", worst}};
    emit(config, body);
    return ok ? 0 : 1;
}

BatteryConfig<double> battery_from_json(const json& j) {
    BatteryConfig<double> cfg;
    for (const auto& entry : j.at("symbols")) {
        const std::string name = entry.get<std::string>();
        if (std::filesystem::exists(name))
            cfg.symbols.push_back(symbol_from_series(
                std::filesystem::path(name).stem().string(),
                series_from_json(json::parse(read_text(name)))));
        else
            cfg.symbols.push_back(make_symbol<double>(name));
    }
    for (const auto& sc : j.at("scenarios")) {
        BatteryScenario<double> scenario;
        scenario.p = sc.at("p").get<double>();
        scenario.q = sc.at("q").get<double>();
        scenario.n = sc.at("n").get<Index>();
        const auto& a = sc.at("a");
        scenario.a = VectorC<double>::Zero(static_cast<Index>(a.size()));
        for (Index i = 0; i < scenario.a.size(); ++i)
            scenario.a[i] = a[static_cast<std::size_t>(i)].get<double>();
        cfg.scenarios.push_back(std::move(scenario));
    }
    cfg.degrees.clear();
    for (const auto& d : j.at("degrees")) cfg.degrees.push_back(d.get<Index>());
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("classify_degree")) cfg.classify.base_degree = j.at("classify_degree").get<Index>();
    if (j.contains("lambda_depth")) cfg.lambda_depth = j.at("lambda_depth").get<Index>();
    return cfg;
}

int run_battery(const RunConfig& config) {
    BatteryConfig<double> cfg;
    if (!config.config_path.empty())
        cfg = battery_from_json(json::parse(read_text(config.config_path)));
    else
        cfg = default_battery<double>();
    cfg.seed = config.seed;

    const auto rep = run_battery(cfg);
    long errors = 0;
    for (const auto& cell : rep.cells)
        if (!cell.error.empty()) ++errors;
    std::printf("battery: %zu cells, %ld errors\n", rep.cells.size(), errors);
    json body = to_json(rep);
    emit(config, body, battery_csv(rep));
    return 0;
}

}  // namespace

int run(const RunConfig& config) {
    try {
        if (config.command == "verify") return run_verify(config);
        if (config.command == "probe") return run_probe(config);
        if (config.command == "classify") return run_classify(config);
        if (config.command == "factorize") return run_factorize(config);
        if (config.command == "ode") return run_ode(config);
        if (config.command == "battery") return run_battery(config);
    } catch (const BadParams& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "usage error: bad input file: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::fprintf(stderr, "usage error: unknown command '%s'\n", config.command.c_str());
    return 2;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"hardylab - numerical laboratory for generalized integration operators on Hardy spaces"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", config.out, "report output path");
        sub->add_option("--format", config.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--degree", config.degree, "truncation degree");
        sub->add_option("--tol", config.tol, "tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--samples", config.samples, "boundary sample count");
    };
    auto add_operator = [&](CLI::App* sub) {
        sub->add_option("--symbol", config.symbol, "named symbol generator");
        sub->add_option("--symbol-file", config.symbol_file, "series file for the symbol");
        sub->add_option("--p", config.p, "domain exponent")->check(CLI::PositiveNumber);
        sub->add_option("--q", config.q, "target exponent")->check(CLI::PositiveNumber);
        sub->add_option("--n", config.n, "operator order");
        sub->add_option("--a", config.a_re, "coefficients a_1..a_{n-1} (real parts)");
        sub->add_option("--a-im", config.a_im, "imaginary parts of a");
    };

    CLI::App* verify = app.add_subcommand("verify", "run built-in verification suites");
    verify->add_option("--suite", config.suite, "identities|derivative-bound|separation|all");
    add_common(verify);

    CLI::App* probe = app.add_subcommand("probe", "boundedness probe for a symbol");
    add_operator(probe);
    add_common(probe);

    CLI::App* classify = app.add_subcommand("classify", "predict boundedness class of a symbol");
    add_operator(classify);
    add_common(classify);
    classify->add_option("--angles-csv", config.angles_csv, "write per-angle G/G_k/S rows here");

    CLI::App* factorize = app.add_subcommand("factorize", "derivative factorization f^(n) = F G^(n)");
    factorize->add_option("--input", config.input, "series file")->required();
    factorize->add_option("--p", config.p, "Hardy exponent")->check(CLI::PositiveNumber);
    factorize->add_option("--n", config.n, "derivative order");
    add_common(factorize);

    CLI::App* ode = app.add_subcommand("ode", "solve the linear ODE by power series");
    ode->add_option("--input", config.input, "problem file")->required();
    add_common(ode);

    CLI::App* battery = app.add_subcommand("battery", "run a symbol/scenario battery");
    battery->add_option("--config", config.config_path, "battery config file");
    add_common(battery);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    return run(config);
}

}  // namespace hardy
