#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/operators.hpp"

using namespace hardy;
using PS = PowerSeries<double>;
using C = std::complex<double>;
using Spec = OperatorSpec<double>;

namespace {

PS random_series(SplitMix64& rng, Index degree) {
    VectorC<double> c(degree + 1);
    for (Index k = 0; k <= degree; ++k) c[k] = rng.unit_disc();
    return PS(std::move(c));
}

VectorC<double> coeffs(std::initializer_list<C> values) {
    VectorC<double> a(static_cast<Index>(values.size()));
    Index i = 0;
    for (const C& v : values) a[i++] = v;
    return a;
}

}  // namespace

TEST_CASE("multiplication operator") {
    SplitMix64 rng(3);
    PS f = random_series(rng, 12);
    CHECK(multiply(PS::constant(1.0), f) == f);
    CHECK(multiply(PS::monomial(1), PS::constant(1.0)) == PS::monomial(1));
}

TEST_CASE("volterra operator") {
    CHECK(max_abs_diff(volterra(PS::monomial(1), PS::constant(1.0)), PS::monomial(1)) == 0.0);
    CHECK(max_abs_diff(volterra(PS::monomial(2, C(0.5)), PS::constant(1.0)),
                       PS::monomial(2, C(0.5))) <= 1e-16);
    SplitMix64 rng(5);
    PS g = random_series(rng, 9), f = random_series(rng, 9);
    CHECK(volterra(g, f).coeff(0) == C(0));
}

TEST_CASE("split operators") {
    SplitMix64 rng(7);
    PS g = random_series(rng, 10), f = random_series(rng, 10);
    CHECK(max_abs_diff(volterra_nk(g, 1, 0, f), volterra(g, f)) == 0.0);

    // monomial case: f = z^k, g = z^{n-k} gives z^n k!(n-k)!/n!
    for (Index n = 1; n <= 5; ++n) {
        for (Index k = 0; k < n; ++k) {
            PS out = volterra_nk(PS::monomial(n - k), n, k, PS::monomial(k));
            double kf = 1, nkf = 1, nf = 1;
            for (Index t = 2; t <= k; ++t) kf *= t;
            for (Index t = 2; t <= n - k; ++t) nkf *= t;
            for (Index t = 2; t <= n; ++t) nf *= t;
            CHECK(max_abs_diff(out, PS::monomial(n, kf * nkf / nf)) <= 1e-15);
        }
    }

    // image of I^n: leading n coefficients vanish
    PS out = volterra_nk(g, 4, 2, f);
    for (Index k = 0; k < 4; ++k) CHECK(out.coeff(k) == C(0));

    CHECK_THROWS_AS(volterra_nk(g, 2, 2, f), BadOrders);
    CHECK_THROWS_AS(volterra_nk(g, 2, 3, f), BadOrders);
}

TEST_CASE("generalized operator") {
    SplitMix64 rng(9);
    PS g = random_series(rng, 12), f = random_series(rng, 12);

    // n = 1: empty coefficient vector reduces to the volterra operator
    Spec s1(1, g, VectorC<double>(0));
    CHECK(max_abs_diff(apply(s1, f), volterra(g, f)) == 0.0);

    // a = 0 keeps only the leading term
    Spec s3(3, g, coeffs({C(0), C(0)}));
    CHECK(max_abs_diff(apply(s3, f), volterra_nk(g, 3, 0, f)) == 0.0);

    // linearity in f
    Spec s(3, g, coeffs({C(0.5, 1.0), C(-2.0, 0.25)}));
    PS f2 = random_series(rng, 12);
    PS lhs = apply(s, f + f2);
    PS rhs = apply(s, f) + apply(s, f2);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-14 * std::max(1.0, rhs.max_abs()));

    // linearity in each coefficient: perturbing a_k adds the matching split term
    for (Index k = 1; k <= 2; ++k) {
        const C delta(0.7, -0.3);
        VectorC<double> a2 = s.a;
        a2[k - 1] += delta;
        PS diff = apply(Spec(3, g, a2), f) - apply(s, f);
        PS expected = delta * volterra_nk(g, 3, k, f);
        CHECK(max_abs_diff(diff, expected) <= 1e-13 * std::max(1.0, expected.max_abs()));
    }

    // image of I^n
    PS out = apply(s, f);
    for (Index k = 0; k < 3; ++k) CHECK(out.coeff(k) == C(0));

    CHECK_THROWS_AS(Spec(2, g, VectorC<double>(0)), BadParams);
    CHECK_THROWS_AS(Spec(0, g, VectorC<double>(0)), BadParams);
}

TEST_CASE("integration by parts residual") {
    // n=1, k=0, f=g=z: T^{1,0}f = z^2/2, T^{2,0}f + T^{2,1}f = 0 + z^2/2
    PS z = PS::monomial(1);
    PS res = ibp_residual(z, 1, 0, z);
    CHECK(res.max_abs() <= 1e-16);

    // vanishing to order n at 0 kills the correction
    SplitMix64 rng(11);
    PS f0 = shift_up(random_series(rng, 8), 3);
    PS g0 = shift_up(random_series(rng, 8), 3);
    PS r0 = ibp_residual(g0, 3, 1, f0);
    CHECK(r0.max_abs() <= 1e-13);

    // closed-form correction for random data, all 0 <= k < n <= 6
    for (int rep = 0; rep < 10; ++rep) {
        PS f = random_series(rng, 12), g = random_series(rng, 12);
        const double scale = std::max(1.0, f.max_abs() * g.max_abs());
        for (Index n = 1; n <= 6; ++n)
            for (Index k = 0; k < n; ++k)
                CHECK(max_abs_diff(ibp_residual(g, n, k, f), ibp_correction(g, n, k, f)) <=
                      1e-12 * scale);
    }
}

TEST_CASE("binomial decomposition residual") {
    SplitMix64 rng(13);
    PS f = random_series(rng, 16), g = random_series(rng, 16);

    // n = 1 is the tautology T = T^{1,0}
    CHECK(binom_decomp_residual(g, 1, f).max_abs() <= 1e-16);

    // n=2, f=1, g=z^2: residual = f(0) g'(0) z = 0
    CHECK(binom_decomp_residual(PS::monomial(2), 2, PS::constant(1.0)).max_abs() <= 1e-16);

    // n=2, f=1, g'(0)=1: residual is exactly z
    PS g1 = PS::monomial(1) + PS::monomial(2, C(3.0));
    PS res = binom_decomp_residual(g1, 2, PS::constant(1.0));
    CHECK(max_abs_diff(res, PS::monomial(1)) <= 1e-15);

    // general data: the residual is a polynomial of degree < n
    for (Index n = 1; n <= 6; ++n) {
        PS r = binom_decomp_residual(g, n, f);
        for (Index k = n; k <= r.degree(); ++k) CHECK(std::abs(r.coeff(k)) <= 1e-12);
    }

    // f, g vanishing to order n: residual identically zero
    PS fv = shift_up(random_series(rng, 8), 4);
    PS gv = shift_up(random_series(rng, 8), 4);
    CHECK(binom_decomp_residual(gv, 4, fv).max_abs() <= 1e-13);
}

TEST_CASE("order-2 decomposition residual") {
    SplitMix64 rng(17);

    // f = 1: both sides reduce to I^2(g'') = g
    PS g = shift_up(random_series(rng, 8), 2);
    CHECK(order2_decomp_residual(g, C(0.7, -0.1), PS::constant(1.0)).max_abs() <= 1e-14);

    // a = 1, g = z^2
    PS f = random_series(rng, 16);
    CHECK(order2_decomp_residual(PS::monomial(2), C(1), f).max_abs() <=
          1e-12 * std::max(1.0, f.max_abs()));

    // random degree-16 f, g = z^3, complex a
    CHECK(order2_decomp_residual(PS::monomial(3), C(2, 1), f).max_abs() <=
          1e-12 * std::max(1.0, f.max_abs()));

    // symbols without double zero at the origin are rejected
    CHECK_THROWS_AS(order2_decomp_residual(PS::monomial(1), C(1), f), SymbolNotVanishing);
    CHECK_THROWS_AS(order2_decomp_residual(PS::constant(1.0), C(1), f), SymbolNotVanishing);
}
