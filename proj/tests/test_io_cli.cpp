#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>

#include "hardy/cli.hpp"
#include "hardy/io.hpp"

using namespace hardy;
using PS = PowerSeries<double>;
using C = std::complex<double>;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "hardylab_test";
    fs::create_directories(dir);
    return dir;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("series json round-trips bit-exactly") {
    SplitMix64 rng(3);
    VectorC<double> c(33);
    for (Index k = 0; k < 33; ++k)
        c[k] = C(rng.uniform(-1e10, 1e10) * std::pow(10, rng.uniform(-20, 0)), rng.uniform(-1, 1));
    c[7] = C(-0.0, 5e-324);  // signed zero and a subnormal
    PS f(std::move(c));

    const std::string text = dump_report(to_json(f));
    PS g = series_from_json(json::parse(text));
    REQUIRE(g.degree() == f.degree());
    for (Index k = 0; k <= f.degree(); ++k) {
        CHECK(bit_equal(f.coeff(k).real(), g.coeff(k).real()));
        CHECK(bit_equal(f.coeff(k).imag(), g.coeff(k).imag()));
    }
}

TEST_CASE("series json validation") {
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"degree":2,"re":[1.0],"im":[0.0]})")),
                    BadParams);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"re":[1.0],"im":[0.0,1.0]})")), BadParams);
}

TEST_CASE("operator spec and ode problem round-trip") {
    SplitMix64 rng(5);
    VectorC<double> a(2);
    a << C(1.0, -0.5), C(0.0, 2.0);
    VectorC<double> gc(5);
    for (Index k = 0; k < 5; ++k) gc[k] = rng.unit_disc();
    OperatorSpec<double> spec(3, PS(std::move(gc)), a);
    OperatorSpec<double> back = operator_spec_from_json(to_json(spec));
    CHECK(back.n == 3);
    CHECK(back.g == spec.g);
    CHECK(back.a == spec.a);

    OdeProblem<double> prob;
    prob.n = 2;
    prob.G = PS::monomial(2);
    prob.g = {PS::monomial(1)};
    prob.f0 = PS::constant(1.0);
    prob.init = VectorC<double>(2);
    prob.init << C(1), C(0, 1);
    OdeProblem<double> pback = ode_problem_from_json(to_json(prob));
    CHECK(pback.n == 2);
    CHECK(pback.G == prob.G);
    CHECK(pback.g[0] == prob.g[0]);
    CHECK(pback.init == prob.init);
}

TEST_CASE("estimate records serialize with all fields") {
    NormEstimate<double> est{1.5, 64, "ladder(depth=4,0) x angles=8", true};
    const json j = to_json(est);
    CHECK(j.at("value") == 1.5);
    CHECK(j.at("truncation_degree") == 64);
    CHECK(j.at("grid") == "ladder(depth=4,0) x angles=8");
    CHECK(j.at("converged") == true);

    DecayProfile<double> prof;
    prof.radii.resize(2);
    prof.values.resize(2);
    prof.radii << 0.5, 0.75;
    prof.values << 1.0, 0.5;
    const json p = to_json(prof);
    CHECK(p.at("radii").size() == 2);
    CHECK(p.at("values")[1] == 0.5);

    DegreeProfile<double> dp;
    dp.degrees = {16, 32};
    dp.values.resize(2);
    dp.values << 2.0, 2.5;
    CHECK(to_json(dp).at("degrees")[1] == 32);
}

TEST_CASE("csv escaping") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("battery reports are byte-identical across runs") {
    BatteryConfig<double> cfg;
    cfg.symbols = {make_symbol<double>("z"), make_symbol<double>("log1m")};
    BatteryScenario<double> sc;
    sc.p = sc.q = 2.0;
    sc.n = 2;
    sc.a = VectorC<double>::Constant(1, C(1));
    cfg.scenarios = {sc};
    cfg.degrees = {16, 32};
    cfg.classify.base_degree = 32;
    cfg.lambda_depth = 2;

    const json report = to_json(run_battery(cfg));
    const std::string first = dump_report(report);
    const std::string second = dump_report(to_json(run_battery(cfg)));
    CHECK(first == second);
    CHECK(!battery_csv(run_battery(cfg)).empty());

    // serialized reports reload to an equal structure
    CHECK(json::parse(first) == report);
}

TEST_CASE("decay and angle csv emitters") {
    DecayProfile<double> prof;
    prof.radii.resize(2);
    prof.values.resize(2);
    prof.radii << 0.5, 0.75;
    prof.values << 1.0, 0.25;
    CHECK(decay_csv(prof) == "radius,value\n0.5,1\n0.75,0.25\n");

    const std::string rows = angle_profile_csv(PS::monomial(1), 0.5, 4, 2);
    CHECK(rows.substr(0, rows.find('\n')) == "theta,G,G2,S");
    CHECK(std::count(rows.begin(), rows.end(), '\n') == 5);
}

TEST_CASE("cli verify") {
    RunConfig config;
    config.command = "verify";
    config.suite = "separation";
    CHECK(run(config) == 0);

    config.suite = "no-such-suite";
    CHECK(run(config) == 2);
}

TEST_CASE("cli classify and probe write reports") {
    const fs::path dir = temp_dir();
    RunConfig config;
    config.command = "classify";
    config.symbol = "z";
    config.n = 1;
    config.p = config.q = 2.0;
    config.degree = 32;
    config.samples = 256;
    config.out = (dir / "classify.json").string();
    CHECK(run(config) == 0);
    const json j = json::parse(read_text(config.out));
    CHECK(j.at("branch") == "p=q");
    CHECK(j.at("meta").at("version") == kVersion);

    RunConfig probe;
    probe.command = "probe";
    probe.symbol = "z";
    probe.n = 1;
    probe.degree = 32;
    probe.out = (dir / "probe.json").string();
    CHECK(run(probe) == 0);
    CHECK(json::parse(read_text(probe.out)).at("verdict") == "stabilizing");

    // identical invocation produces byte-identical report files
    const std::string first = read_text(probe.out);
    probe.out = (dir / "probe2.json").string();
    CHECK(run(probe) == 0);
    CHECK(read_text(probe.out) == first);
}

TEST_CASE("cli factorize and ode") {
    const fs::path dir = temp_dir();
    write_text((dir / "f.json").string(),
               dump_report(to_json(PS::constant(1.0) + PS::monomial(1, C(0.5)) +
                                   PS::monomial(2, C(0.25)))));

    RunConfig config;
    config.command = "factorize";
    config.input = (dir / "f.json").string();
    config.p = 2.0;
    config.n = 2;
    config.degree = 128;
    config.samples = 1024;
    config.out = (dir / "factor.json").string();
    CHECK(run(config) == 0);
    const json j = json::parse(read_text(config.out));
    CHECK(j.at("residual_sup").get<double>() <= 1e-9);

    OdeProblem<double> prob;
    prob.n = 1;
    prob.G = padded(PS::monomial(1), 4);
    prob.g = {};
    prob.f0 = PS::zero(4);
    prob.init = VectorC<double>::Constant(1, C(1));
    write_text((dir / "ode.json").string(), dump_report(to_json(prob)));

    RunConfig ode;
    ode.command = "ode";
    ode.input = (dir / "ode.json").string();
    ode.degree = 24;
    ode.out = (dir / "ode_out.json").string();
    CHECK(run(ode) == 0);
    PS sol = series_from_json(json::parse(read_text(ode.out)).at("solution"));
    CHECK(std::abs(sol.coeff(1) + 1.0) <= 1e-14);
}

TEST_CASE("usage errors exit 2 and write nothing") {
    const fs::path dir = temp_dir();
    RunConfig config;
    config.command = "probe";
    config.symbol = "no-such-symbol";
    config.out = (dir / "never.json").string();
    fs::remove(config.out);
    CHECK(run(config) == 2);
    CHECK(!fs::exists(config.out));

    RunConfig missing;
    missing.command = "factorize";
    missing.input = (dir / "missing.json").string();
    missing.out = (dir / "never2.json").string();
    CHECK(run(missing) == 2);
    CHECK(!fs::exists(missing.out));

    RunConfig unknown;
    unknown.command = "frobnicate";
    CHECK(run(unknown) == 2);
}

TEST_CASE("cli_main parses subcommands") {
    const char* ok[] = {"hardylab", "verify", "--suite", "separation"};
    CHECK(cli_main(4, const_cast<char**>(ok)) == 0);

    const char* bad[] = {"hardylab", "frobnicate"};
    CHECK(cli_main(2, const_cast<char**>(bad)) == 2);
}
