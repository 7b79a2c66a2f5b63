#pragma once

#include <string>
#include <vector>

#include "hardy/operators.hpp"
#include "hardy/paley.hpp"
#include "hardy/sepalg.hpp"
#include "hardy/spaces.hpp"

namespace hardy {

/// Outcome of one verification sweep; max_err is relative to the sweep's own
/// tolerance scale so "pass" means max_err <= 1.
struct SuiteResult {
    std::string name;
    bool pass = false;
    long cases = 0;
    double max_err = 0;  // worst observed error / tolerance
    std::string detail;
};

namespace detail {

template <typename Real>
PowerSeries<Real> random_series(SplitMix64& rng, Index degree) {
    VectorC<Real> c(degree + 1);
    for (Index k = 0; k <= degree; ++k) c[k] = rng.template unit_disc<Real>();
    return PowerSeries<Real>(std::move(c));
}

inline void fold(SuiteResult& res, double err_over_tol) {
    res.max_err = std::max(res.max_err, err_over_tol);
    ++res.cases;
}

}  // namespace detail

/// Exact operator identities: integration-by-parts correction, binomial
/// splitting polynomial degree, and the order-2 rearrangement.
inline SuiteResult identities_suite(std::uint64_t seed = kDefaultSeed, int n_pairs = 100,
                                    Index degree = 16, Index n_max = 5, double tol = 1e-12) {
    using PS = PowerSeries<double>;
    SuiteResult res;
    res.name = "identities";
    SplitMix64 rng(seed);
    for (int rep = 0; rep < n_pairs; ++rep) {
        const PS f = detail::random_series<double>(rng, degree);
        const PS g = detail::random_series<double>(rng, degree);
        const double scale = std::max(1.0, f.max_abs() * g.max_abs());
        for (Index n = 1; n <= n_max; ++n) {
            for (Index k = 0; k < n; ++k)
                detail::fold(res, max_abs_diff(ibp_residual(g, n, k, f), ibp_correction(g, n, k, f)) /
                                      (tol * scale));
            const PS bres = binom_decomp_residual(g, n, f);
            double high = 0;
            for (Index j = n; j <= bres.degree(); ++j) high = std::max(high, std::abs(bres.coeff(j)));
            detail::fold(res, high / (tol * scale));
        }
        const PS g0 = remove_jet(g, 2);
        const std::complex<double> a = rng.unit_disc();
        detail::fold(res, order2_decomp_residual(g0, a, f).max_abs() / (tol * scale));
    }
    res.pass = res.max_err <= 1.0;
    res.detail = "ibp/binomial/order-2 residuals vs closed forms";
    return res;
}

/// hardy_norm(.,2) against the coefficient l2 norm.
inline SuiteResult parseval_suite(std::uint64_t seed = kDefaultSeed, int count = 20,
                                  Index degree = 24, double tol = 1e-12) {
    SuiteResult res;
    res.name = "parseval";
    SplitMix64 rng(seed + 1);
    for (int rep = 0; rep < count; ++rep) {
        const PowerSeries<double> f = detail::random_series<double>(rng, degree);
        const double l2 = std::sqrt(f.coeffs.squaredNorm());
        const double quad = hardy_norm(f, 2.0).value;
        detail::fold(res, std::abs(quad - l2) / (tol * std::max(1.0, l2)));
    }
    res.pass = res.max_err <= 1.0;
    res.detail = "boundary quadrature vs coefficient l2";
    return res;
}

/// Coefficient Dirichlet integral against the 2D quadrature of |f'|^2.
inline SuiteResult dirichlet_suite(std::uint64_t seed = kDefaultSeed, int count = 10,
                                   Index degree = 32, double tol = 1e-8) {
    SuiteResult res;
    res.name = "dirichlet";
    SplitMix64 rng(seed + 2);
    const DiscQuad<double> quad = disc_quad<double>(degree + 8, 4 * degree + 8);
    for (int rep = 0; rep < count; ++rep) {
        const PowerSeries<double> f = detail::random_series<double>(rng, degree);
        const PowerSeries<double> d = derivative(f, 1);
        const double coeff_route = dirichlet_integral(f);
        const double quad_route =
            disc_integral(quad, [&](std::complex<double> z) { return std::norm(eval(d, z)); });
        detail::fold(res, std::abs(coeff_route - quad_route) / (tol * std::max(1.0, coeff_route)));
    }
    res.pass = res.max_err <= 1.0;
    res.detail = "coefficient sum vs 2D quadrature";
    return res;
}

/// Pointwise derivative bound lhs <= rhs on a |z| <= 0.9 sweep, plus the
/// exact coefficient inequality at the origin.
inline SuiteResult derivative_bound_suite(std::uint64_t seed = kDefaultSeed, int n_funcs = 20,
                                Index degree = 16, Index n_max = 4) {
    SuiteResult res;
    res.name = "derivative-bound";
    SplitMix64 rng(seed + 3);
    const DiscQuad<double> quad = disc_quad<double>(degree + 8, 2 * degree + 16);
    const std::vector<double> radii = {0.0, 0.5, 0.75, 0.875, 0.9};
    for (int rep = 0; rep < n_funcs; ++rep) {
        const PowerSeries<double> f = detail::random_series<double>(rng, degree);
        for (Index n = 1; n <= n_max; ++n) {
            for (double r : radii) {
                for (int j = 0; j < 16; ++j) {
                    const std::complex<double> z = std::polar(r, 2 * pi_v<double> * j / 16.0);
                    const auto [lhs, rhs] = derivative_area_bound(f, z, n, quad);
                    // pass iff lhs <= rhs (1 + 1e-6) + eps
                    detail::fold(res, (lhs - rhs * (1 + 1e-6)) <= 1e-12 ? 0.0 : 2.0);
                    if (r == 0.0) break;  // one angle suffices at the origin
                }
            }
            // |f^(n)(0)|^2 <= n!(n-1)! sum k |c_k|^2, exactly on coefficients
            double nfac = 1, nm1fac = 1;
            for (Index t = 2; t <= n; ++t) nfac *= t;
            for (Index t = 2; t <= n - 1; ++t) nm1fac *= t;
            const double lhs0 = std::norm(eval_derivative(f, n, std::complex<double>(0)));
            detail::fold(res,
                         lhs0 <= nfac * nm1fac * dirichlet_integral(f) * (1 + 1e-12) ? 0.0 : 2.0);
        }
    }
    res.pass = res.max_err <= 1.0;
    res.detail = "derivative-vs-area bound sweep";
    return res;
}

/// Determinant product formula, separation reconstruction, and synthetic
/// separated bounds.
inline SuiteResult separation_suite(std::uint64_t seed = kDefaultSeed) {
    SuiteResult res;
    res.name = "separation";
    for (Index n = 2; n <= 8; ++n) {
        const GammaSet<double> gs = default_gamma_set(n, 2.0);
        const double direct = pochhammer_matrix(gs).partialPivLu().determinant();
        const double product = vandermonde_determinant(gs);
        detail::fold(res, std::abs(product - direct) / (1e-10 * std::abs(direct)));
    }
    for (Index n = 1; n <= 8; ++n) {
        const GammaSet<double> gs = default_gamma_set(n, 2.0);
        for (Index k = 0; k < n; ++k) {
            const auto sc = separation_coefficients(gs, k);
            detail::fold(res, sc.residual / 1e-10);
            if (n <= 6) detail::fold(res, sc.residual_abs / 1e-10);
        }
    }
    // synthetic separated bounds dominate the hidden components
    SplitMix64 rng(seed + 4);
    const Index n = 4;
    const GammaSet<double> gs = default_gamma_set(n, 2.0);
    std::vector<std::array<std::complex<double>, 4>> hidden(32);
    for (auto& row : hidden)
        for (auto& v : row) v = rng.unit_disc();
    VectorR<double> c(n);
    for (Index i = 0; i < n; ++i) {
        double best = 0;
        for (const auto& row : hidden) {
            std::complex<double> s = 0;
            for (Index k = 0; k < n; ++k) s += row[k] * pochhammer(gs.gammas[i], k);
            best = std::max(best, std::abs(s));
        }
        c[i] = best;
    }
    for (Index k = 0; k < n; ++k) {
        const double bound = separated_bound(c, separation_coefficients(gs, k).r);
        for (const auto& row : hidden)
            detail::fold(res, std::abs(row[k]) <= bound * (1 + 1e-10) ? 0.0 : 2.0);
    }
    res.pass = res.max_err <= 1.0;
    res.detail = "vandermonde determinant, separation reconstruction, synthetic bounds";
    return res;
}

/// Named bundles used by the command-line `verify` entry point.
inline std::vector<SuiteResult> run_suites(const std::string& which,
                                           std::uint64_t seed = kDefaultSeed) {
    std::vector<SuiteResult> out;
    const bool all = (which == "all");
    if (all || which == "identities") {
        out.push_back(identities_suite(seed));
        out.push_back(dirichlet_suite(seed));
        out.push_back(parseval_suite(seed));
    }
    if (all || which == "derivative-bound") out.push_back(derivative_bound_suite(seed));
    if (all || which == "separation") out.push_back(separation_suite(seed));
    if (out.empty()) throw BadParams("unknown suite: " + which);
    return out;
}

}  // namespace hardy
