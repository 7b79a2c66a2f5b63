#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "hardy/core.hpp"

namespace hardy {

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N.
///
/// The coefficient vector always has exactly degree()+1 entries; the
/// truncation degree is explicit state, never a global setting.  Operations
/// that grow the natural degree (mul, integrate) return the grown series and
/// leave truncation to the caller.
template <typename Real>
struct PowerSeries {
    using Complex = std::complex<Real>;

    VectorC<Real> coeffs;

    PowerSeries() : coeffs(VectorC<Real>::Zero(1)) {}

    explicit PowerSeries(VectorC<Real> c) : coeffs(std::move(c)) {
        if (coeffs.size() == 0) coeffs = VectorC<Real>::Zero(1);
    }

    static PowerSeries zero(Index degree = 0) {
        return PowerSeries(VectorC<Real>::Zero(degree + 1));
    }

    static PowerSeries constant(Complex value) {
        VectorC<Real> c(1);
        c[0] = value;
        return PowerSeries(std::move(c));
    }

    static PowerSeries monomial(Index power, Complex scale = Complex(1)) {
        VectorC<Real> c = VectorC<Real>::Zero(power + 1);
        c[power] = scale;
        return PowerSeries(std::move(c));
    }

    Index degree() const { return coeffs.size() - 1; }

    /// Coefficient c_k, zero beyond the stored degree.
    Complex coeff(Index k) const {
        return (k >= 0 && k < coeffs.size()) ? coeffs[k] : Complex(0);
    }

    Real max_abs() const {
        Real m = 0;
        for (Index k = 0; k < coeffs.size(); ++k) m = std::max(m, std::abs(coeffs[k]));
        return m;
    }

    bool is_zero(Real tol = Real(0)) const { return max_abs() <= tol; }

    bool all_finite() const {
        for (Index k = 0; k < coeffs.size(); ++k)
            if (!std::isfinite(coeffs[k].real()) || !std::isfinite(coeffs[k].imag())) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// basic vector-space structure

template <typename Real>
PowerSeries<Real> padded(const PowerSeries<Real>& f, Index degree) {
    if (f.degree() >= degree) return f;
    VectorC<Real> c = VectorC<Real>::Zero(degree + 1);
    c.head(f.coeffs.size()) = f.coeffs;
    return PowerSeries<Real>(std::move(c));
}

template <typename Real>
PowerSeries<Real> truncated(const PowerSeries<Real>& f, Index degree) {
    if (f.degree() <= degree) return f;
    return PowerSeries<Real>(f.coeffs.head(degree + 1).eval());
}

template <typename Real>
PowerSeries<Real> operator+(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
    const Index n = std::max(f.degree(), g.degree());
    VectorC<Real> c = VectorC<Real>::Zero(n + 1);
    c.head(f.coeffs.size()) = f.coeffs;
    c.head(g.coeffs.size()) += g.coeffs;
    return PowerSeries<Real>(std::move(c));
}

template <typename Real>
PowerSeries<Real> operator-(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
    const Index n = std::max(f.degree(), g.degree());
    VectorC<Real> c = VectorC<Real>::Zero(n + 1);
    c.head(f.coeffs.size()) = f.coeffs;
    c.head(g.coeffs.size()) -= g.coeffs;
    return PowerSeries<Real>(std::move(c));
}

template <typename Real>
PowerSeries<Real> operator*(std::complex<Real> a, const PowerSeries<Real>& f) {
    return PowerSeries<Real>((a * f.coeffs).eval());
}

template <typename Real>
PowerSeries<Real> operator*(Real a, const PowerSeries<Real>& f) {
    return std::complex<Real>(a) * f;
}

/// Coefficientwise equality after zero-padding to the common degree.
template <typename Real>
bool operator==(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
    const Index n = std::max(f.degree(), g.degree());
    for (Index k = 0; k <= n; ++k)
        if (f.coeff(k) != g.coeff(k)) return false;
    return true;
}

template <typename Real>
Real max_abs_diff(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
    const Index n = std::max(f.degree(), g.degree());
    Real m = 0;
    for (Index k = 0; k <= n; ++k) m = std::max(m, std::abs(f.coeff(k) - g.coeff(k)));
    return m;
}

// ---------------------------------------------------------------------------
// multiplicative structure

/// Cauchy product truncated at degree n_out.
template <typename Real>
PowerSeries<Real> mul(const PowerSeries<Real>& f, const PowerSeries<Real>& g, Index n_out) {
    VectorC<Real> c = VectorC<Real>::Zero(n_out + 1);
    const Index nf = f.degree(), ng = g.degree();
    for (Index i = 0; i <= std::min(nf, n_out); ++i) {
        const std::complex<Real> fi = f.coeffs[i];
        if (fi == std::complex<Real>(0)) continue;
        const Index jmax = std::min(ng, n_out - i);
        for (Index j = 0; j <= jmax; ++j) c[i + j] += fi * g.coeffs[j];
    }
    return PowerSeries<Real>(std::move(c));
}

/// Cauchy product at the full natural degree.
template <typename Real>
PowerSeries<Real> mul(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
    return mul(f, g, f.degree() + g.degree());
}

/// k-th derivative: coefficient m picks up (m+k)!/m!.  Degree drops by k; a
/// series emptied by differentiation collapses to the zero series.
template <typename Real>
PowerSeries<Real> derivative(const PowerSeries<Real>& f, Index k) {
    if (k <= 0) return f;
    const Index n = f.degree();
    if (k > n) return PowerSeries<Real>::zero();
    VectorC<Real> c(n - k + 1);
    for (Index m = 0; m + k <= n; ++m) {
        Real fac = 1;
        for (Index t = 1; t <= k; ++t) fac *= static_cast<Real>(m + t);
        c[m] = fac * f.coeffs[m + k];
    }
    return PowerSeries<Real>(std::move(c));
}

/// n-fold integration from 0: coefficient m moves to m+n scaled by m!/(m+n)!.
template <typename Real>
PowerSeries<Real> integrate(const PowerSeries<Real>& f, Index n) {
    if (n <= 0) return f;
    const Index nf = f.degree();
    VectorC<Real> c = VectorC<Real>::Zero(nf + n + 1);
    for (Index m = 0; m <= nf; ++m) {
        Real fac = 1;
        for (Index t = 1; t <= n; ++t) fac *= static_cast<Real>(m + t);
        c[m + n] = f.coeffs[m] / fac;
    }
    return PowerSeries<Real>(std::move(c));
}

/// Horner evaluation.
template <typename Real>
std::complex<Real> eval(const PowerSeries<Real>& f, std::complex<Real> z) {
    std::complex<Real> acc = 0;
    for (Index k = f.degree(); k >= 0; --k) acc = acc * z + f.coeffs[k];
    return acc;
}

/// Value of f^{(k)} at z, by Horner evaluation of the differentiated series.
template <typename Real>
std::complex<Real> eval_derivative(const PowerSeries<Real>& f, Index k, std::complex<Real> z) {
    return eval(derivative(f, k), z);
}

/// f^s with the principal branch at c_0; the remaining coefficients solve
/// f h' = s f' h degree by degree (J.C.P. Miller recurrence).
template <typename Real>
PowerSeries<Real> pow(const PowerSeries<Real>& f, std::complex<Real> s, Index n_out = -1) {
    using C = std::complex<Real>;
    const C f0 = f.coeff(0);
    if (f0 == C(0)) throw ZeroConstantTerm();
    const Index n = (n_out < 0) ? f.degree() : n_out;
    VectorC<Real> h = VectorC<Real>::Zero(n + 1);
    h[0] = std::exp(s * std::log(f0));
    for (Index k = 1; k <= n; ++k) {
        C acc = 0;
        const Index jmax = std::min(k, f.degree());
        for (Index j = 1; j <= jmax; ++j)
            acc += (s * static_cast<Real>(j) - static_cast<Real>(k - j)) * f.coeffs[j] * h[k - j];
        h[k] = acc / (static_cast<Real>(k) * f0);
    }
    return PowerSeries<Real>(std::move(h));
}

template <typename Real>
PowerSeries<Real> pow(const PowerSeries<Real>& f, Real s, Index n_out = -1) {
    return pow(f, std::complex<Real>(s), n_out);
}

/// Series logarithm with the principal branch at c_0, from l' f = f'.
template <typename Real>
PowerSeries<Real> log(const PowerSeries<Real>& f, Index n_out = -1) {
    using C = std::complex<Real>;
    const C f0 = f.coeff(0);
    if (f0 == C(0)) throw ZeroConstantTerm();
    const Index n = (n_out < 0) ? f.degree() : n_out;
    VectorC<Real> l = VectorC<Real>::Zero(n + 1);
    l[0] = std::log(f0);
    for (Index k = 1; k <= n; ++k) {
        C acc = static_cast<Real>(k) * f.coeff(k);
        const Index mmax = std::min(k - 1, n);
        for (Index m = 1; m <= mmax; ++m) acc -= static_cast<Real>(m) * l[m] * f.coeff(k - m);
        l[k] = acc / (static_cast<Real>(k) * f0);
    }
    return PowerSeries<Real>(std::move(l));
}

/// h with g h = f through degree min(deg f, deg g); forward substitution.
template <typename Real>
PowerSeries<Real> div(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
    using C = std::complex<Real>;
    const C g0 = g.coeff(0);
    if (g0 == C(0)) throw ZeroConstantTerm();
    const Index n = std::min(f.degree(), g.degree());
    VectorC<Real> h(n + 1);
    for (Index k = 0; k <= n; ++k) {
        C acc = f.coeff(k);
        const Index jmax = std::min(k, g.degree());
        for (Index j = 1; j <= jmax; ++j) acc -= g.coeffs[j] * h[k - j];
        h[k] = acc / g0;
    }
    return PowerSeries<Real>(std::move(h));
}

/// f(rho z): c_k -> rho^k c_k.
template <typename Real>
PowerSeries<Real> dilate(const PowerSeries<Real>& f, Real rho) {
    VectorC<Real> c(f.coeffs.size());
    Real rk = 1;
    for (Index k = 0; k < c.size(); ++k, rk *= rho) c[k] = rk * f.coeffs[k];
    return PowerSeries<Real>(std::move(c));
}

/// f(e^{i phi} z): c_k -> e^{ik phi} c_k.
template <typename Real>
PowerSeries<Real> rotate(const PowerSeries<Real>& f, Real phi) {
    using C = std::complex<Real>;
    VectorC<Real> c(f.coeffs.size());
    const C w = std::polar(Real(1), phi);
    C wk = 1;
    for (Index k = 0; k < c.size(); ++k, wk *= w) c[k] = wk * f.coeffs[k];
    return PowerSeries<Real>(std::move(c));
}

/// z^m f(z).
template <typename Real>
PowerSeries<Real> shift_up(const PowerSeries<Real>& f, Index m) {
    if (m <= 0) return f;
    VectorC<Real> c = VectorC<Real>::Zero(f.coeffs.size() + m);
    c.tail(f.coeffs.size()) = f.coeffs;
    return PowerSeries<Real>(std::move(c));
}

/// f(z) / z^m, discarding the first m coefficients.
template <typename Real>
PowerSeries<Real> shift_down(const PowerSeries<Real>& f, Index m) {
    if (m <= 0) return f;
    if (m > f.degree()) return PowerSeries<Real>::zero();
    return PowerSeries<Real>(f.coeffs.tail(f.coeffs.size() - m).eval());
}

/// Zero out the first k Taylor coefficients.
template <typename Real>
PowerSeries<Real> remove_jet(const PowerSeries<Real>& f, Index k) {
    PowerSeries<Real> g = f;
    for (Index j = 0; j < std::min(k, g.coeffs.size()); ++j) g.coeffs[j] = 0;
    return g;
}

/// Index of the first nonzero coefficient (exact test), or -1 for the zero series.
template <typename Real>
Index vanishing_order(const PowerSeries<Real>& f) {
    for (Index k = 0; k < f.coeffs.size(); ++k)
        if (f.coeffs[k] != std::complex<Real>(0)) return k;
    return -1;
}

}  // namespace hardy
