#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/constructions.hpp"
#include "hardy/operators.hpp"
#include "hardy/paley.hpp"
#include "hardy/testfam.hpp"

namespace hardy {

/// A symbol given as a truncation rule: gen(N) returns the degree-N
/// truncation, so probes can ladder the degree.
template <typename Real>
struct Symbol {
    std::string name;
    std::function<PowerSeries<Real>(Index)> gen;
};

template <typename Real>
Symbol<Real> symbol_from_series(std::string name, PowerSeries<Real> f) {
    return {std::move(name), [f = std::move(f)](Index n) { return truncated(f, n); }};
}

/// Named generators used by the default battery:
///   z, z2            polynomials (VMOA regime)
///   log1m            log(1/(1-z)), the model BMOA-not-VMOA symbol
///   sqrt1m           (1-z)^{1/2}, Lipschitz-1/2 regime
///   invroot4         (1-z)^{-1/4}, H^s boundary regime
///   lacunary         sum z^{2^k}, Bloch-not-BMOA regime
template <typename Real>
Symbol<Real> make_symbol(const std::string& name) {
    using PS = PowerSeries<Real>;
    if (name == "z") return {"z", [](Index) { return PS::monomial(1); }};
    if (name == "z2") return {"z2", [](Index) { return PS::monomial(2); }};
    if (name == "log1m")
        return {"log1m", [](Index n) {
                    VectorC<Real> c = VectorC<Real>::Zero(n + 1);
                    for (Index k = 1; k <= n; ++k) c[k] = Real(1) / static_cast<Real>(k);
                    return PS(std::move(c));
                }};
    if (name == "sqrt1m")
        return {"sqrt1m", [](Index n) {
                    return pow(padded(PS::constant(1) - PS::monomial(1), n), std::complex<Real>(Real(0.5)));
                }};
    if (name == "invroot4")
        return {"invroot4", [](Index n) {
                    return pow(padded(PS::constant(1) - PS::monomial(1), n), std::complex<Real>(Real(-0.25)));
                }};
    if (name == "lacunary")
        return {"lacunary", [](Index n) {
                    VectorC<Real> c = VectorC<Real>::Zero(n + 1);
                    for (Index p = 1; p <= n && p <= 1024; p *= 2) c[p] = 1;
                    return PS(std::move(c));
                }};
    throw BadParams("unknown symbol: " + name);
}

namespace detail {

inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

template <typename Real>
std::string point_label(std::complex<Real> lambda, Real gamma) {
    return "f(|l|=" + format_real(static_cast<double>(std::abs(lambda))) +
           ",arg=" + format_real(static_cast<double>(std::arg(lambda))) +
           ",g=" + format_real(static_cast<double>(gamma)) + ")";
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (a + 1)) ^ (0xbf58476d1ce4e5b9ULL * (b + 1)));
    return rng.next();
}

}  // namespace detail

template <typename Real>
struct ProbePoint {
    std::string label;
    Real ratio;
};

template <typename Real>
struct ProbeReport {
    std::string symbol;
    Index n = 1;
    VectorC<Real> a;
    Real p = 2, q = 2;
    std::string family;
    std::string grid;  // lambda-grid descriptor
    std::vector<Index> degrees;
    VectorR<Real> sup_per_degree;  // running sup over the nested family union
    Real sup_ratio = 0;
    std::vector<ProbePoint<Real>> per_point;  // at the final degree
    std::string verdict;                      // stabilizing | growing | zero
    Real max_tail_coeff = 0;  // largest top coefficient among final-degree members
    std::uint64_t seed = kDefaultSeed;
};

/// Default probe gamma exponents, valid for the given domain exponent.
template <typename Real>
std::vector<Real> default_gammas(Real p) {
    const Real base = std::max(Real(2), Real(1) / p + Real(1));
    return {base, base + 1};
}

/// Empirical boundedness probe: sup over truncated test functions and seeded
/// random polynomials of ||T f||_q / ||f||_p, tracked along a degree ladder.
/// Families at successive degrees are nested (the sup is cumulative), so the
/// reported sup is nondecreasing; stabilization across the last doubling is
/// the boundedness evidence.
template <typename Real>
ProbeReport<Real> boundedness_probe(const Symbol<Real>& symbol, Index n, const VectorC<Real>& a,
                                    Real p, Real q,
                                    const std::vector<std::complex<Real>>& lambdas,
                                    const std::vector<Real>& gammas,
                                    const std::vector<Index>& degrees,
                                    std::uint64_t seed = kDefaultSeed, Index n_random = 32) {
    ProbeReport<Real> rep;
    rep.symbol = symbol.name;
    rep.n = n;
    rep.a = a;
    rep.p = p;
    rep.q = q;
    rep.seed = seed;
    rep.degrees = degrees;
    rep.family = "test-functions(" + std::to_string(lambdas.size() * gammas.size()) + ") + random(" +
                 std::to_string(n_random) + ")/degree";
    rep.grid = "points=" + std::to_string(lambdas.size());
    rep.sup_per_degree.resize(static_cast<Index>(degrees.size()));

    Real running = 0;
    bool any_nonzero = false;
    for (std::size_t di = 0; di < degrees.size(); ++di) {
        const Index deg = degrees[di];
        const OperatorSpec<Real> spec(n, symbol.gen(deg), a);
        const bool last = (di + 1 == degrees.size());

        auto push = [&](const PowerSeries<Real>& f, const std::string& label) {
            const Real denom = p_norm_boundary(f, p);
            if (denom < Real(1e-300)) return;
            const Real ratio = p_norm_boundary(apply(spec, f), q) / denom;
            if (ratio >= Real(1e-12)) any_nonzero = true;
            running = std::max(running, ratio);
            if (last) {
                rep.per_point.push_back({label, ratio});
                // top coefficient magnitude makes under-truncation visible
                rep.max_tail_coeff = std::max(rep.max_tail_coeff, std::abs(f.coeff(f.degree())));
            }
        };

        for (const auto& lambda : lambdas)
            for (const Real gamma : gammas)
                push(test_function(TestParams<Real>(lambda, gamma, p), deg),
                     detail::point_label(lambda, gamma));

        for (Index r = 0; r < n_random; ++r) {
            SplitMix64 rng(detail::mix_seed(seed, di, static_cast<std::uint64_t>(r)));
            VectorC<Real> c(deg + 1);
            for (Index k = 0; k <= deg; ++k) c[k] = rng.template unit_disc<Real>();
            push(PowerSeries<Real>(std::move(c)), "random#" + std::to_string(r));
        }
        rep.sup_per_degree[static_cast<Index>(di)] = running;
    }

    rep.sup_ratio = running;
    const Index nd = rep.sup_per_degree.size();
    if (!any_nonzero) {
        rep.verdict = "zero";
    } else if (nd >= 2) {
        const Real prev = rep.sup_per_degree[nd - 2], cur = rep.sup_per_degree[nd - 1];
        rep.verdict = (cur - prev) <= Real(0.10) * cur ? "stabilizing" : "growing";
    } else {
        rep.verdict = "stabilizing";
    }
    return rep;
}

template <typename Real>
struct NecessityRow {
    std::complex<Real> lambda;
    VectorR<Real> c_inputs;  // S(lambda, gamma_i), the per-gamma combination sizes
    VectorR<Real> bounds;    // per active k: bound on |g^{(n-k)}| (1-|l|^2)^{n-k+1/q-1/p}
};

template <typename Real>
struct NecessityReport {
    std::vector<Index> active_k;
    std::vector<NecessityRow<Real>> rows;
    VectorR<Real> sup_bounds;
    Real max_condition = 0;
};

/// Necessity extraction: the growth estimate turns ||T f_{l,g}||_q <= C_g into
///   | sum_k F_k(l) (g)_k | <= S(l,g),
///   F_k(l) = a_k conj(l)^k g^{(n-k)}(l) (1-|l|^2)^{n-k+1/q-1/p},
/// and the separation coefficients bound each weighted derivative.  Restricted
/// to |l| >= 1/2 where the conj(l)^k factor is invertible.
template <typename Real>
NecessityReport<Real> necessity_bounds(const Symbol<Real>& symbol, Index n, const VectorC<Real>& a,
                                       Real p, Real q, const GammaSet<Real>& gs,
                                       const std::vector<std::complex<Real>>& lambdas) {
    using C = std::complex<Real>;
    if (gs.size() != n) throw BadParams("necessity_bounds: need one gamma per operator order");
    const OperatorSpec<Real> probe_spec(n, PowerSeries<Real>(), a);  // coefficient access only

    NecessityReport<Real> rep;
    for (Index k = 0; k < n; ++k)
        if (probe_spec.coefficient(k) != C(0)) rep.active_k.push_back(k);

    std::vector<SeparationCoeffs<Real>> seps;
    for (Index k : rep.active_k) {
        seps.push_back(separation_coefficients(gs, k));
        rep.max_condition = std::max(rep.max_condition, seps.back().condition);
    }

    rep.sup_bounds = VectorR<Real>::Zero(static_cast<Index>(rep.active_k.size()));
    for (const auto& lambda : lambdas) {
        if (std::abs(lambda) < Real(0.5)) continue;
        const Index deg = scaled_degree(lambda);
        const PowerSeries<Real> g = symbol.gen(deg);
        const OperatorSpec<Real> spec(n, g, a);
        const Real gap = Real(1) - std::norm(lambda);

        NecessityRow<Real> row;
        row.lambda = lambda;
        row.c_inputs.resize(gs.size());
        for (Index i = 0; i < gs.size(); ++i) {
            const PowerSeries<Real> f = test_function(TestParams<Real>(lambda, gs.gammas[i], p), deg);
            // (T f)^{(n)}(l) = sum_k a_k f^{(k)}(l) g^{(n-k)}(l), exactly
            C val = 0;
            for (Index k = 0; k < n; ++k)
                val += spec.coefficient(k) * eval_derivative(f, k, lambda) *
                       eval_derivative(g, n - k, lambda);
            row.c_inputs[i] = std::abs(val) * std::pow(gap, static_cast<Real>(n) + Real(1) / q);
        }

        row.bounds.resize(static_cast<Index>(rep.active_k.size()));
        for (std::size_t ik = 0; ik < rep.active_k.size(); ++ik) {
            const Index k = rep.active_k[ik];
            const Real fk_bound = separated_bound(row.c_inputs, seps[ik].r);
            const Real denom = std::abs(spec.coefficient(k)) *
                               std::pow(std::abs(lambda), static_cast<Real>(k));
            row.bounds[static_cast<Index>(ik)] = fk_bound / denom;
            rep.sup_bounds[static_cast<Index>(ik)] =
                std::max(rep.sup_bounds[static_cast<Index>(ik)], row.bounds[static_cast<Index>(ik)]);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

template <typename Real>
struct CompactnessReport {
    VectorR<Real> radii;
    VectorR<Real> norms;  // ||T f_{l,g}||_p along |l| -> 1
    std::string verdict;  // compact-consistent | non-vanishing | zero
};

/// Strong-convergence probe: the family tends to zero on compact sets, so a
/// compact operator must send it to zero in norm along the ladder.
template <typename Real>
CompactnessReport<Real> compactness_probe(const Symbol<Real>& symbol, Index n,
                                          const VectorC<Real>& a, Real p, Real gamma,
                                          const std::vector<Real>& radii,
                                          const std::vector<Index>& degrees = {}) {
    if (!degrees.empty() && degrees.size() != radii.size())
        throw BadParams("compactness_probe: degree ladder must match the radius ladder");
    CompactnessReport<Real> rep;
    rep.radii.resize(static_cast<Index>(radii.size()));
    rep.norms.resize(static_cast<Index>(radii.size()));
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const std::complex<Real> lambda(radii[i], 0);
        const Index deg = degrees.empty() ? scaled_degree(lambda) : degrees[i];
        const OperatorSpec<Real> spec(n, symbol.gen(deg), a);
        const PowerSeries<Real> f = test_function(TestParams<Real>(lambda, gamma, p), deg);
        rep.radii[static_cast<Index>(i)] = radii[i];
        rep.norms[static_cast<Index>(i)] = p_norm_boundary(apply(spec, f), p);
    }
    const Real first = rep.norms[0], last = rep.norms[rep.norms.size() - 1];
    if (rep.norms.maxCoeff() < Real(1e-12))
        rep.verdict = "zero";
    else
        rep.verdict = (last <= Real(0.10) * first) ? "compact-consistent" : "non-vanishing";
    return rep;
}

/// The lambda ladder must outrun the truncation's resolution radius
/// (depth >~ log2(degree/30) + 1), otherwise every symbol's garsia trend
/// stabilizes on the resolved region and growth goes undetected.
struct ClassifyOptions {
    Index base_degree = 256;
    Index lambda_depth = 6;
    Index lambda_angles = 8;
    Index garsia_samples = 1024;
};

template <typename Real>
struct ClassifyReport {
    std::string symbol;
    Index n = 1;
    VectorC<Real> a;
    Real p = 2, q = 2;
    Real alpha = 0;
    Index k_last = 0;       // last nonzero a index (0 when a = 0)
    std::string branch;     // p=q | p<q | p>q
    std::string estimator;  // named estimator driving the prediction
    std::string grid;       // evaluation-grid descriptor
    std::vector<std::pair<std::string, Real>> estimates;
    std::string prediction;
    std::string notes;
};

/// Dispatch on the exponent pair and produce the membership evidence the
/// corresponding symbol class asks for.  Verdicts on truncations are trend-based: an estimate
/// counts as stabilized when doubling the degree moves it by less than 10%.
template <typename Real>
ClassifyReport<Real> classify_symbol(const Symbol<Real>& symbol, Index n, const VectorC<Real>& a,
                                     Real p, Real q, const ClassifyOptions& opt = {}) {
    using C = std::complex<Real>;
    if (!(p > 0) || !(q > 0)) throw BadExponent("classify_symbol: need p, q > 0");
    ClassifyReport<Real> rep;
    rep.symbol = symbol.name;
    rep.n = n;
    rep.a = a;
    rep.p = p;
    rep.q = q;
    rep.alpha = Real(1) / p - Real(1) / q;
    if (a.size() != n - 1) throw BadParams("classify_symbol: need exactly n-1 coefficients");
    rep.k_last = 0;
    for (Index k = n - 1; k >= 1; --k)
        if (a[k - 1] != C(0)) {
            rep.k_last = k;
            break;
        }

    const Index deg = opt.base_degree;
    auto stabilized = [](Real lo, Real hi) {
        return std::abs(hi - lo) <= Real(0.10) * std::max({std::abs(hi), std::abs(lo), Real(1e-300)});
    };

    if (p == q) {
        rep.branch = "p=q";
        rep.estimator = "garsia";
        const DiscGrid<Real> grid{opt.lambda_depth, opt.lambda_angles, true};
        rep.grid = grid.descriptor() + " garsia M=" + std::to_string(opt.garsia_samples);
        const PowerSeries<Real> gfine = symbol.gen(2 * deg);
        const Real g1 = garsia_norm(symbol.gen(deg), grid, opt.garsia_samples).value;
        const Real g2 = garsia_norm(gfine, grid, opt.garsia_samples).value;
        rep.estimates.emplace_back("garsia@" + std::to_string(deg), g1);
        rep.estimates.emplace_back("garsia@" + std::to_string(2 * deg), g2);

        // decay ladder capped at the truncation's resolution radius; a symbol
        // whose generator saturates below the requested degree is a polynomial
        // and is fully resolved at every radius
        Index depth_cap = 8;
        if (gfine.degree() >= 2 * deg)
            depth_cap = std::max<Index>(
                2, static_cast<Index>(std::floor(std::log2(static_cast<double>(gfine.degree()) / 30.0))));
        depth_cap = std::min<Index>(depth_cap, 8);
        std::vector<Real> radii;
        Real gap = Real(0.5);
        for (Index i = 1; i <= depth_cap; ++i, gap /= 2) radii.push_back(Real(1) - gap);
        const DecayProfile<Real> prof =
            decay_profile(gfine, ProfileKind::garsia, radii, opt.lambda_angles, opt.garsia_samples);
        const Real peak = prof.values.maxCoeff();
        const Real tail = prof.values[prof.values.size() - 1];
        rep.estimates.emplace_back("garsia-decay-peak", peak);
        rep.estimates.emplace_back("garsia-decay-tail", tail);

        const bool bounded = stabilized(g1, g2);
        // garsia locals of smooth symbols decay like sqrt(1-r); a flat profile
        // over the resolved ladder is the non-vanishing-oscillation signature
        const bool compact = bounded && (tail <= Real(0.5) * std::max(peak, Real(1e-300)));
        rep.prediction = !bounded ? "unbounded-evidence" : (compact ? "bounded+compact" : "bounded");
        return rep;
    }

    if (p < q) {
        rep.branch = "p<q";
        const Real alpha = rep.alpha;
        if (alpha > static_cast<Real>(n - rep.k_last)) {
            rep.estimator = "coefficient-tail";
            // bounded only for the zero operator, which forces g^{(n-k)} = 0
            const PowerSeries<Real> g = symbol.gen(deg);
            Real tail = 0;
            for (Index j = n - rep.k_last; j <= g.degree(); ++j)
                tail = std::max(tail, std::abs(g.coeff(j)));
            rep.estimates.emplace_back("max|c_j| j>=" + std::to_string(n - rep.k_last), tail);
            rep.prediction = tail < Real(1e-12) ? "zero-operator" : "zero-operator-required";
            rep.notes = "alpha > n-k: bounded only if the operator vanishes";
            return rep;
        }
        const Index l = static_cast<Index>(std::ceil(static_cast<double>(alpha))) - 1;
        const Real beta = alpha - static_cast<Real>(l);
        rep.estimator = "lipschitz(second-derivative)";
        rep.grid = default_disc_grid<Real>().refined().descriptor();
        const Real v1 = lipschitz_norm(derivative(symbol.gen(deg), l), beta).value;
        const Real v2 = lipschitz_norm(derivative(symbol.gen(2 * deg), l), beta).value;
        rep.estimates.emplace_back("lipschitz(g^(" + std::to_string(l) + ")," +
                                       detail::format_real(static_cast<double>(beta)) + ")@" +
                                       std::to_string(deg),
                                   v1);
        rep.estimates.emplace_back("lipschitz(g^(" + std::to_string(l) + ")," +
                                       detail::format_real(static_cast<double>(beta)) + ")@" +
                                       std::to_string(2 * deg),
                                   v2);
        rep.prediction = stabilized(v1, v2) ? "bounded" : "unbounded-evidence";
        rep.notes = "keys on g^(" + std::to_string(l) + ") in Lambda_" +
                    detail::format_real(static_cast<double>(beta));
        return rep;
    }

    rep.branch = "p>q";
    rep.estimator = "hs-profile";
    rep.grid = "degree-ladder{deg/2,deg,2deg} circle-quadrature";
    const Real s = Real(1) / (Real(1) / q - Real(1) / p);
    rep.estimates.emplace_back("s", s);
    const std::vector<Index> ladder = {deg / 2, deg, 2 * deg};
    VectorR<Real> values(3);
    for (Index i = 0; i < 3; ++i)
        values[i] = hardy_norm(symbol.gen(ladder[i]), s).value;
    for (Index i = 0; i < 3; ++i)
        rep.estimates.emplace_back("Hs@" + std::to_string(ladder[i]), values[i]);
    rep.prediction = stabilized(values[1], values[2]) ? "bounded" : "unbounded-evidence";
    rep.notes = "sufficiency direction; necessity beyond n=2, a=0 is conjectural";
    return rep;
}

// ---------------------------------------------------------------------------
// battery runner

template <typename Real>
struct BatteryScenario {
    Real p = 2, q = 2;
    Index n = 1;
    VectorC<Real> a;
};

template <typename Real>
struct BatteryConfig {
    std::vector<Symbol<Real>> symbols;
    std::vector<BatteryScenario<Real>> scenarios;
    std::vector<Index> degrees = {64, 128};
    std::uint64_t seed = kDefaultSeed;
    Index lambda_depth = 4;  // keep the probe grid ahead of the degree ladder
    Index lambda_angles = 8;
    Index compactness_cap = 2048;  // degree cap for the compactness ladder
    ClassifyOptions classify;
};

template <typename Real>
struct BatteryCell {
    std::string symbol;
    BatteryScenario<Real> scenario;
    ClassifyReport<Real> classify;
    ProbeReport<Real> probe;
    CompactnessReport<Real> compactness;
    std::string error;  // empty on success
};

template <typename Real>
struct BatteryReport {
    std::vector<Index> degrees;
    std::uint64_t seed = kDefaultSeed;
    std::vector<BatteryCell<Real>> cells;
};

template <typename Real>
BatteryConfig<Real> default_battery() {
    BatteryConfig<Real> cfg;
    for (const char* name : {"z", "z2", "log1m", "sqrt1m", "invroot4", "lacunary"})
        cfg.symbols.push_back(make_symbol<Real>(name));
    auto scenario = [](Real p, Real q, Index n, std::initializer_list<std::complex<Real>> a) {
        BatteryScenario<Real> sc{p, q, n, VectorC<Real>(static_cast<Index>(a.size()))};
        Index i = 0;
        for (const auto& v : a) sc.a[i++] = v;
        return sc;
    };
    cfg.scenarios = {
        scenario(2, 2, 1, {}),
        scenario(2, 2, 2, {std::complex<Real>(1)}),
        scenario(1, 2, 2, {std::complex<Real>(0)}),
        scenario(2, 1, 2, {std::complex<Real>(0)}),
    };
    cfg.classify.base_degree = 128;
    return cfg;
}

template <typename Real>
BatteryReport<Real> run_battery(const BatteryConfig<Real>& cfg) {
    BatteryReport<Real> rep;
    rep.degrees = cfg.degrees;
    rep.seed = cfg.seed;
    const DiscGrid<Real> lgrid{cfg.lambda_depth, cfg.lambda_angles, true};
    const std::vector<std::complex<Real>> lambdas = lgrid.points();
    std::vector<Real> comp_radii;
    std::vector<Index> comp_degrees;
    Real gap = Real(0.5);
    for (Index i = 1; i <= 6; ++i, gap /= 2) {
        comp_radii.push_back(Real(1) - gap);
        comp_degrees.push_back(
            std::min(cfg.compactness_cap, scaled_degree(std::complex<Real>(Real(1) - gap, 0))));
    }

    for (const auto& symbol : cfg.symbols) {
        for (const auto& sc : cfg.scenarios) {
            BatteryCell<Real> cell;
            cell.symbol = symbol.name;
            cell.scenario = sc;
            try {
                cell.classify = classify_symbol(symbol, sc.n, sc.a, sc.p, sc.q, cfg.classify);
                cell.probe = boundedness_probe(symbol, sc.n, sc.a, sc.p, sc.q, lambdas,
                                               default_gammas(sc.p), cfg.degrees, cfg.seed);
                cell.compactness = compactness_probe(symbol, sc.n, sc.a, sc.p,
                                                     default_gammas(sc.p)[0], comp_radii, comp_degrees);
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
            rep.cells.push_back(std::move(cell));
        }
    }
    return rep;
}

}  // namespace hardy
