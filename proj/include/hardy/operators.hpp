#pragma once

#include <vector>

#include "hardy/series.hpp"

namespace hardy {

/// The generalized integration operator
///   f  ->  I^n ( f g^{(n)} + a_1 f' g^{(n-1)} + ... + a_{n-1} f^{(n-1)} g' ),
/// with the leading coefficient fixed at a_0 = 1.  a holds a_1..a_{n-1} and is
/// empty when n = 1.
template <typename Real>
struct OperatorSpec {
    Index n = 1;
    PowerSeries<Real> g;
    VectorC<Real> a;

    OperatorSpec() = default;

    OperatorSpec(Index order, PowerSeries<Real> symbol, VectorC<Real> coeffs)
        : n(order), g(std::move(symbol)), a(std::move(coeffs)) {
        if (n < 1) throw BadParams("OperatorSpec: need n >= 1");
        if (a.size() != n - 1) throw BadParams("OperatorSpec: need exactly n-1 coefficients");
    }

    std::complex<Real> coefficient(Index k) const {
        return k == 0 ? std::complex<Real>(1) : a[k - 1];
    }
};

template <typename Real>
PowerSeries<Real> multiply(const PowerSeries<Real>& phi, const PowerSeries<Real>& f) {
    return mul(phi, f);
}

/// T f = integral_0^z f g'.
template <typename Real>
PowerSeries<Real> volterra(const PowerSeries<Real>& g, const PowerSeries<Real>& f) {
    return integrate(mul(f, derivative(g, 1)), 1);
}

/// The split piece I^n ( f^{(k)} g^{(n-k)} ), 0 <= k < n.
template <typename Real>
PowerSeries<Real> volterra_nk(const PowerSeries<Real>& g, Index n, Index k,
                              const PowerSeries<Real>& f) {
    if (k < 0 || k >= n) throw BadOrders();
    return integrate(mul(derivative(f, k), derivative(g, n - k)), n);
}

template <typename Real>
PowerSeries<Real> apply(const OperatorSpec<Real>& spec, const PowerSeries<Real>& f) {
    PowerSeries<Real> acc;
    for (Index k = 0; k < spec.n; ++k) {
        const std::complex<Real> a_k = spec.coefficient(k);
        if (a_k == std::complex<Real>(0)) continue;
        acc = acc + a_k * mul(derivative(f, k), derivative(spec.g, spec.n - k));
    }
    return integrate(acc, spec.n);
}

namespace detail {

template <typename Real>
Real binomial(Index n, Index k) {
    Real r = 1;
    for (Index t = 1; t <= k; ++t) r = r * static_cast<Real>(n - k + t) / static_cast<Real>(t);
    return r;
}

}  // namespace detail

/// One integration by parts relates consecutive orders:
///   I^{n,k} = I^{n+1,k} + I^{n+1,k+1} + f^{(k)}(0) g^{(n-k)}(0) z^n / n!.
/// Returns the residual  T^{n,k} f - T^{n+1,k} f - T^{n+1,k+1} f,  which must
/// equal that single monomial.
template <typename Real>
PowerSeries<Real> ibp_residual(const PowerSeries<Real>& g, Index n, Index k,
                               const PowerSeries<Real>& f) {
    if (k < 0 || k >= n) throw BadOrders();
    return volterra_nk(g, n, k, f) - volterra_nk(g, n + 1, k, f) - volterra_nk(g, n + 1, k + 1, f);
}

/// The exact monomial the ibp residual must match.
template <typename Real>
PowerSeries<Real> ibp_correction(const PowerSeries<Real>& g, Index n, Index k,
                                 const PowerSeries<Real>& f) {
    Real nfac = 1;
    for (Index t = 2; t <= n; ++t) nfac *= static_cast<Real>(t);
    const std::complex<Real> c =
        eval_derivative(f, k, std::complex<Real>(0)) * eval_derivative(g, n - k, std::complex<Real>(0));
    return PowerSeries<Real>::monomial(n, c / nfac);
}

/// Residual of the binomial splitting of T into order-n pieces:
///   T f - T^{n,0} f - sum_{k=1}^{n-1} C(n-1,k) T^{n,k} f.
/// The residual is a polynomial of degree < n, and vanishes when f and g both
/// vanish to order n at the origin.
template <typename Real>
PowerSeries<Real> binom_decomp_residual(const PowerSeries<Real>& g, Index n,
                                        const PowerSeries<Real>& f) {
    if (n < 1) throw BadParams("binom_decomp_residual: need n >= 1");
    PowerSeries<Real> acc = volterra(g, f) - volterra_nk(g, n, 0, f);
    for (Index k = 1; k < n; ++k)
        acc = acc - std::complex<Real>(detail::binomial<Real>(n - 1, k)) * volterra_nk(g, n, k, f);
    return acc;
}

/// n = 2 with scalar coefficient a, for symbols with g(0) = g'(0) = 0:
///   T_{g,a} f = f g + (1-a) I^2(f'' g) + (a-2) I(f' g).
/// Returns the residual of that identity.
template <typename Real>
PowerSeries<Real> order2_decomp_residual(const PowerSeries<Real>& g, std::complex<Real> a,
                                         const PowerSeries<Real>& f) {
    const Real scale = std::max(Real(1), g.max_abs());
    if (std::abs(g.coeff(0)) > Real(1e-14) * scale || std::abs(g.coeff(1)) > Real(1e-14) * scale)
        throw SymbolNotVanishing();
    VectorC<Real> coeffs(1);
    coeffs[0] = a;
    const PowerSeries<Real> lhs = apply(OperatorSpec<Real>(2, g, coeffs), f);
    const PowerSeries<Real> rhs = mul(f, g) +
                                  (std::complex<Real>(1) - a) * integrate(mul(derivative(f, 2), g), 2) +
                                  (a - std::complex<Real>(2)) * integrate(mul(derivative(f, 1), g), 1);
    return lhs - rhs;
}

}  // namespace hardy
