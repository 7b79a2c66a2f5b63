#pragma once

#include <cmath>

#include "hardy/series.hpp"

namespace hardy {

/// Equispaced samples v_j = u(r e^{2 pi i j / M}) on the circle of radius r.
template <typename Real>
struct BoundaryFunction {
    Real radius = 1;
    VectorC<Real> samples;

    Index size() const { return samples.size(); }

    Real max_imag() const {
        Real m = 0;
        for (Index j = 0; j < samples.size(); ++j) m = std::max(m, std::abs(samples[j].imag()));
        return m;
    }
};

namespace detail {

// e^{-2 pi i j / M}, j = 0..M-1
template <typename Real>
VectorC<Real> unit_roots_conj(Index m) {
    VectorC<Real> w(m);
    for (Index j = 0; j < m; ++j)
        w[j] = std::polar(Real(1), Real(-2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(m));
    return w;
}

}  // namespace detail

template <typename Real>
BoundaryFunction<Real> sample(const PowerSeries<Real>& f, Real r, Index m) {
    if (!(r > 0 && r <= 1) || m < 1) throw BadParams("sample: need 0 < r <= 1 and M >= 1");
    BoundaryFunction<Real> u;
    u.radius = r;
    u.samples.resize(m);
    for (Index j = 0; j < m; ++j) {
        const std::complex<Real> z =
            std::polar(r, Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(m));
        u.samples[j] = eval(f, z);
    }
    return u;
}

/// Two-sided DFT coefficients u_hat_k = (1/M) sum_j v_j e^{-2 pi i k j / M},
/// k = -floor(M/2) .. floor(M/2).
template <typename Real>
struct FourierCoeffs {
    VectorC<Real> values;  // index 0 holds k = k_min
    Index k_min = 0;

    Index k_max() const { return k_min + values.size() - 1; }

    std::complex<Real> at(Index k) const {
        const Index i = k - k_min;
        return (i >= 0 && i < values.size()) ? values[i] : std::complex<Real>(0);
    }
};

/// Coefficients for a contiguous index window [k_lo, k_hi]; O(M * window).
template <typename Real>
VectorC<Real> fourier_window(const BoundaryFunction<Real>& u, Index k_lo, Index k_hi) {
    const Index m = u.size();
    const VectorC<Real> w = detail::unit_roots_conj<Real>(m);
    VectorC<Real> out(k_hi - k_lo + 1);
    for (Index k = k_lo; k <= k_hi; ++k) {
        std::complex<Real> acc = 0;
        for (Index j = 0; j < m; ++j) {
            const Index idx = ((k * j) % m + m) % m;
            acc += u.samples[j] * w[idx];
        }
        out[k - k_lo] = acc / static_cast<Real>(m);
    }
    return out;
}

template <typename Real>
FourierCoeffs<Real> fourier_coeffs(const BoundaryFunction<Real>& u) {
    FourierCoeffs<Real> fc;
    fc.k_min = -(u.size() / 2);
    fc.values = fourier_window(u, fc.k_min, u.size() / 2);
    return fc;
}

/// Analytic completion of real boundary data: u_hat_0 + 2 sum_{k=1}^N u_hat_k z^k.
/// Its real part is the Poisson extension of u.
template <typename Real>
PowerSeries<Real> herglotz(const BoundaryFunction<Real>& u, Index n,
                           Real imag_tol = Real(1e-12)) {
    if (u.radius != Real(1)) throw BadParams("herglotz: samples must live on the unit circle");
    if (n > u.size() / 2 - 1) throw BadParams("herglotz: need N <= M/2 - 1");
    if (u.max_imag() > imag_tol * std::max(Real(1), u.samples.cwiseAbs().maxCoeff()))
        throw ComplexData();
    VectorC<Real> hat = fourier_window(u, 0, n);
    VectorC<Real> c(n + 1);
    c[0] = hat[0];
    for (Index k = 1; k <= n; ++k) c[k] = Real(2) * hat[k];
    return PowerSeries<Real>(std::move(c));
}

/// Discrete Poisson integral (1/M) sum_j v_j (1-|z|^2)/|zeta_j - z|^2.
template <typename Real>
Real poisson_value(const BoundaryFunction<Real>& u, std::complex<Real> z) {
    const Index m = u.size();
    Real acc = 0;
    const Real one_minus = Real(1) - std::norm(z);
    for (Index j = 0; j < m; ++j) {
        const std::complex<Real> zeta =
            std::polar(Real(1), Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(m));
        acc += u.samples[j].real() * one_minus / std::norm(zeta - z);
    }
    return acc / static_cast<Real>(m);
}

/// ((1/M) sum_j |v_j|^p)^{1/p}.
template <typename Real>
Real p_mean(const BoundaryFunction<Real>& u, Real p) {
    if (!(p > 0)) throw BadExponent("p_mean: need p > 0");
    const Index m = u.size();
    Real acc = 0;
    for (Index j = 0; j < m; ++j) acc += std::pow(std::abs(u.samples[j]), p);
    return std::pow(acc / static_cast<Real>(m), Real(1) / p);
}

}  // namespace hardy
