#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>

#include "hardy/sepalg.hpp"

using namespace hardy;

namespace {

GammaSet<double> gammas(std::initializer_list<double> values) {
    VectorR<double> g(static_cast<Index>(values.size()));
    Index i = 0;
    for (double v : values) g[i++] = v;
    return GammaSet<double>(std::move(g));
}

}  // namespace

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK(pochhammer(3.7, 1) == 3.7);
    CHECK(pochhammer(2.0, 3) == 24.0);  // 2*3*4
}

TEST_CASE("pochhammer matrix") {
    CHECK(pochhammer_matrix(gammas({5.0}))(0, 0) == 1.0);

    MatrixR<double> m = pochhammer_matrix(gammas({2.0, 3.0}));
    CHECK(m(0, 0) == 1.0);
    CHECK(m(0, 1) == 2.0);
    CHECK(m(1, 0) == 1.0);
    CHECK(m(1, 1) == 3.0);

    // column recurrence (gamma)_j = (gamma)_{j-1} (gamma + j - 1)
    GammaSet<double> gs = gammas({2.5, 4.0, 5.5, 7.0});
    MatrixR<double> p = pochhammer_matrix(gs);
    for (Index i = 0; i < 4; ++i)
        for (Index j = 1; j < 4; ++j)
            CHECK(std::abs(p(i, j) - p(i, j - 1) * (gs.gammas[i] + j - 1)) <= 1e-12 * p(i, j));
}

TEST_CASE("vandermonde determinant matches the LU determinant") {
    CHECK(std::abs(vandermonde_determinant(gammas({2.0, 5.0})) - 3.0) <= 1e-15);
    CHECK(std::abs(vandermonde_determinant(gammas({2.0, 3.0, 4.0})) - 2.0) <= 1e-15);

    for (Index n = 2; n <= 8; ++n) {
        GammaSet<double> gs = default_gamma_set(n, 2.0);  // integer-spaced from 2
        const double direct = pochhammer_matrix(gs).partialPivLu().determinant();
        const double product = vandermonde_determinant(gs);
        CHECK(std::abs(product - direct) <= 1e-10 * std::abs(direct));
        CHECK(product * direct > 0);  // same sign
    }

    // moderate random spreads: the identity still holds well inside 1e-8
    SplitMix64 rng(3);
    for (Index n = 2; n <= 8; ++n) {
        VectorR<double> g(n);
        g[0] = 2.0 + rng.uniform();
        for (Index i = 1; i < n; ++i) g[i] = g[i - 1] + 0.3 + rng.uniform(0.0, 9.7 / n);
        GammaSet<double> gs(std::move(g));
        const double direct = pochhammer_matrix(gs).partialPivLu().determinant();
        const double product = vandermonde_determinant(gs);
        CHECK(std::abs(product - direct) <= 1e-8 * std::abs(direct));
    }
}

TEST_CASE("separation coefficients") {
    auto sc = separation_coefficients(gammas({4.0}), 0);
    CHECK(sc.r.size() == 1);
    CHECK(std::abs(sc.r[0] - 1.0) <= 1e-15);

    // n=2, gammas (2,3), k=0: 3*Gamma_0 - 2*Gamma_1 = (1,0)
    sc = separation_coefficients(gammas({2.0, 3.0}), 0);
    CHECK(std::abs(sc.r[0] - 3.0) <= 1e-12);
    CHECK(std::abs(sc.r[1] + 2.0) <= 1e-12);
    CHECK(sc.residual <= 1e-10);

    SplitMix64 rng(5);
    for (Index n = 1; n <= 5; ++n) {
        VectorR<double> g(n);
        g[0] = 2.0 + rng.uniform();
        for (Index i = 1; i < n; ++i) g[i] = g[i - 1] + 1.0 + rng.uniform(0.0, 0.5);
        GammaSet<double> gs(std::move(g));
        for (Index k = 0; k < n; ++k) {
            auto coeffs = separation_coefficients(gs, k);
            CHECK(coeffs.residual_abs <= 1e-10);
            CHECK(coeffs.condition >= 1.0);
        }
    }
    for (Index k = 0; k < 6; ++k)
        CHECK(separation_coefficients(default_gamma_set(6, 2.0), k).residual_abs <= 1e-10);

    // n up to 8: row scales reach ~1e8, the componentwise backward error is
    // the meaningful measure and stays at roundoff
    for (Index n = 7; n <= 8; ++n) {
        GammaSet<double> gs = default_gamma_set(n, 2.0);
        for (Index k = 0; k < n; ++k) {
            auto coeffs = separation_coefficients(gs, k);
            CHECK(coeffs.residual <= 1e-12);
        }
    }
}

TEST_CASE("coincident gammas are rejected") {
    CHECK_THROWS_AS(gammas({2.0, 2.0, 3.0}), BadParams);  // construction enforces ascending
    VectorR<double> g(2);
    g[0] = 2.0;
    g[1] = 2.0 + 1e-13;
    CHECK_THROWS_AS(separation_coefficients(GammaSet<double>(std::move(g)), 0), SingularSystem);
}

TEST_CASE("separated bound") {
    VectorR<double> zero = VectorR<double>::Zero(3), r(3);
    r << 1.0, -2.0, 0.5;
    CHECK(separated_bound(zero, r) == 0.0);

    VectorR<double> c1(1), r1(1);
    c1 << 7.0;
    r1 << 1.0;
    CHECK(separated_bound(c1, r1) == 7.0);

    VectorR<double> bad(2);
    CHECK_THROWS_AS(separated_bound(bad, r), BadParams);
}

TEST_CASE("separation bound on a synthetic instance") {
    // hidden components f_k on a grid, only their pochhammer combinations are
    // observed; the extracted bound must dominate each |f_k| pointwise
    const Index n = 4;
    GammaSet<double> gs = gammas({2.0, 3.0, 4.0, 5.0});
    SplitMix64 rng(7);

    const int n_points = 40;
    std::vector<std::array<std::complex<double>, 4>> f(n_points);
    for (auto& row : f)
        for (auto& v : row) v = rng.unit_disc();  // |f_k| <= 1

    // observed bounds C_gamma = max over grid of |sum_k f_k (gamma)_k|
    VectorR<double> c(n);
    for (Index i = 0; i < n; ++i) {
        double best = 0;
        for (const auto& row : f) {
            std::complex<double> s = 0;
            for (Index k = 0; k < n; ++k) s += row[k] * pochhammer(gs.gammas[i], k);
            best = std::max(best, std::abs(s));
        }
        c[i] = best;
    }

    for (Index k = 0; k < n; ++k) {
        auto sc = separation_coefficients(gs, k);
        const double bound = separated_bound(c, sc.r);
        for (const auto& row : f) CHECK(std::abs(row[k]) <= bound * (1 + 1e-10));
    }
}
