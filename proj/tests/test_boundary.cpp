#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/boundary.hpp"

using namespace hardy;
using PS = PowerSeries<double>;
using BF = BoundaryFunction<double>;
using C = std::complex<double>;

namespace {

PS random_series(SplitMix64& rng, Index degree) {
    VectorC<double> c(degree + 1);
    for (Index k = 0; k <= degree; ++k) c[k] = rng.unit_disc();
    return PS(std::move(c));
}

}  // namespace

TEST_CASE("sampling") {
    BF u = sample(PS::constant(C(2.0, -1.0)), 0.5, 8);
    for (Index j = 0; j < 8; ++j) CHECK(std::abs(u.samples[j] - C(2.0, -1.0)) <= 1e-15);

    BF v = sample(PS::monomial(1), 1.0, 4);
    CHECK(std::abs(v.samples[0] - C(1, 0)) <= 1e-15);
    CHECK(std::abs(v.samples[1] - C(0, 1)) <= 1e-15);
    CHECK(std::abs(v.samples[2] - C(-1, 0)) <= 1e-15);
    CHECK(std::abs(v.samples[3] - C(0, -1)) <= 1e-15);
}

TEST_CASE("fourier coefficients recover sampled series") {
    SplitMix64 rng(3);
    PS f = random_series(rng, 16);
    const double r = 0.8;
    BF u = sample(f, r, 64);
    FourierCoeffs<double> fc = fourier_coeffs(u);
    for (Index k = 0; k <= 16; ++k) {
        const C expected = f.coeff(k) * std::pow(r, static_cast<double>(k));
        CHECK(std::abs(fc.at(k) - expected) <= 1e-13);
    }
    for (Index k = 17; k <= fc.k_max(); ++k) CHECK(std::abs(fc.at(k)) <= 1e-13);
    for (Index k = fc.k_min; k < 0; ++k) CHECK(std::abs(fc.at(k)) <= 1e-13);
}

TEST_CASE("fourier basics and Parseval") {
    BF ones;
    ones.radius = 1;
    ones.samples = VectorC<double>::Constant(16, C(1));
    FourierCoeffs<double> fc = fourier_coeffs(ones);
    CHECK(std::abs(fc.at(0) - 1.0) <= 1e-15);
    for (Index k = 1; k <= fc.k_max(); ++k) CHECK(std::abs(fc.at(k)) <= 1e-14);

    BF wave;
    wave.radius = 1;
    wave.samples.resize(16);
    for (Index j = 0; j < 16; ++j) wave.samples[j] = std::polar(1.0, 2 * pi_v<double> * j / 16.0);
    fc = fourier_coeffs(wave);
    CHECK(std::abs(fc.at(1) - 1.0) <= 1e-14);
    CHECK(std::abs(fc.at(0)) <= 1e-14);
    CHECK(std::abs(fc.at(-1)) <= 1e-14);

    SplitMix64 rng(5);
    BF u;
    u.radius = 1;
    u.samples.resize(33);  // odd M: two-sided window covers every frequency once
    for (Index j = 0; j < 33; ++j) u.samples[j] = rng.unit_disc();
    fc = fourier_coeffs(u);
    double lhs = 0, rhs = 0;
    for (Index j = 0; j < 33; ++j) lhs += std::norm(u.samples[j]);
    lhs /= 33.0;
    for (Index k = fc.k_min; k <= fc.k_max(); ++k) rhs += std::norm(fc.at(k));
    CHECK(std::abs(lhs - rhs) <= 1e-13);
}

TEST_CASE("herglotz transform") {
    BF ones;
    ones.radius = 1;
    ones.samples = VectorC<double>::Constant(32, C(1));
    PS h = herglotz(ones, 8);
    CHECK(std::abs(h.coeff(0) - 1.0) <= 1e-14);
    for (Index k = 1; k <= 8; ++k) CHECK(std::abs(h.coeff(k)) <= 1e-14);

    BF cosine;
    cosine.radius = 1;
    cosine.samples.resize(32);
    for (Index j = 0; j < 32; ++j) cosine.samples[j] = std::cos(2 * pi_v<double> * j / 32.0);
    PS hz = herglotz(cosine, 8);
    CHECK(max_abs_diff(hz, PS::monomial(1)) <= 1e-14);
}

TEST_CASE("herglotz of nonnegative data has nonnegative real part") {
    SplitMix64 rng(7);
    BF u;
    u.radius = 1;
    u.samples.resize(128);
    for (Index j = 0; j < 128; ++j) u.samples[j] = rng.uniform();
    PS h = herglotz(u, 48);
    for (double r : {0.0, 0.3, 0.6, 0.9}) {
        for (int j = 0; j < 32; ++j) {
            const C z = std::polar(r, 2 * pi_v<double> * j / 32.0);
            CHECK(eval(h, z).real() >= -1e-10);
        }
    }
    // transform is real at the origin for data of constant sign
    CHECK(std::abs(eval(h, C(0)).imag()) <= 1e-12);
}

TEST_CASE("herglotz is linear") {
    SplitMix64 rng(9);
    BF u, v;
    u.radius = v.radius = 1;
    u.samples.resize(64);
    v.samples.resize(64);
    for (Index j = 0; j < 64; ++j) {
        u.samples[j] = rng.uniform(-1, 1);
        v.samples[j] = rng.uniform(-1, 1);
    }
    BF w;
    w.radius = 1;
    w.samples = 2.0 * u.samples + 3.0 * v.samples;
    PS hw = herglotz(w, 16);
    PS combo = 2.0 * herglotz(u, 16) + 3.0 * herglotz(v, 16);
    CHECK(max_abs_diff(hw, combo) <= 1e-14);
}

TEST_CASE("herglotz rejects complex data") {
    BF u;
    u.radius = 1;
    u.samples = VectorC<double>::Constant(16, C(1.0, 0.5));
    CHECK_THROWS_AS(herglotz(u, 4), ComplexData);
}

TEST_CASE("poisson integral") {
    BF ones;
    ones.radius = 1;
    ones.samples = VectorC<double>::Constant(64, C(1));
    CHECK(std::abs(poisson_value(ones, C(0.3, -0.4)) - 1.0) <= 1e-13);

    SplitMix64 rng(11);
    BF u;
    u.radius = 1;
    u.samples.resize(64);
    double mean = 0;
    for (Index j = 0; j < 64; ++j) {
        u.samples[j] = rng.uniform(-2, 2);
        mean += u.samples[j].real();
    }
    mean /= 64.0;
    CHECK(std::abs(poisson_value(u, C(0)) - mean) <= 1e-14);
}

TEST_CASE("poisson matches real part of herglotz for trig data") {
    // degree <= M/4 trigonometric data: both quadratures agree up to aliasing
    SplitMix64 rng(13);
    const Index m = 128;
    BF u;
    u.radius = 1;
    u.samples.resize(m);
    for (Index j = 0; j < m; ++j) {
        const double t = 2 * pi_v<double> * j / static_cast<double>(m);
        double s = 0;
        SplitMix64 coef(99);
        for (int d = 0; d <= 32; ++d) s += coef.uniform(-1, 1) * std::cos(d * t) +
                                           coef.uniform(-1, 1) * std::sin(d * t);
        u.samples[j] = s;
    }
    PS h = herglotz(u, m / 2 - 1);
    for (double r : {0.2, 0.5, 0.7}) {
        for (int j = 0; j < 8; ++j) {
            const C z = std::polar(r, 2 * pi_v<double> * j / 8.0 + 0.1);
            CHECK(std::abs(eval(h, z).real() - poisson_value(u, z)) <= 1e-8);
        }
    }
}

TEST_CASE("p-means") {
    BF u = sample(PS::constant(C(-3.0, 4.0)), 1.0, 16);
    CHECK(std::abs(p_mean(u, 1.3) - 5.0) <= 1e-13);

    BF v = sample(PS::monomial(1), 1.0, 16);
    CHECK(std::abs(p_mean(v, 2.0) - 1.0) <= 1e-14);

    PS f = PS::constant(1.0) + PS::monomial(1);
    BF w = sample(f, 1.0, 64);
    CHECK(std::abs(p_mean(w, 2.0) - std::sqrt(2.0)) <= 1e-13);
}

TEST_CASE("integral means increase with radius") {
    SplitMix64 rng(17);
    PS f = random_series(rng, 20);
    double prev = 0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        const double m2 = p_mean(sample(f, r, 128), 2.0);
        CHECK(m2 >= prev - 1e-13);
        prev = m2;
    }
}
