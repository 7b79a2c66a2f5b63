#pragma once

#include <vector>

#include "hardy/sepalg.hpp"
#include "hardy/spaces.hpp"

namespace hardy {

/// Parameters of the probe family
///   f(z) = (1-|lambda|^2)^{gamma-1/p} / (1 - conj(lambda) z)^gamma,
/// a unit-scale H^p family concentrating at lambda.
template <typename Real>
struct TestParams {
    std::complex<Real> lambda;
    Real gamma;
    Real p;

    TestParams(std::complex<Real> l, Real g, Real hardy_p) : lambda(l), gamma(g), p(hardy_p) {
        if (!(std::abs(lambda) < 1)) throw BadParams("TestParams: need |lambda| < 1");
        if (!(p > 0)) throw BadParams("TestParams: need p > 0");
        if (!(gamma > 1 / p)) throw BadParams("TestParams: need gamma > 1/p");
    }
};

/// Truncation degree that resolves the family near the boundary.
template <typename Real>
Index scaled_degree(std::complex<Real> lambda, Index cap = 200000) {
    const Real gap = Real(1) - std::abs(lambda);
    const Index n = static_cast<Index>(std::ceil(Real(50) / gap));
    return std::min(n, cap);
}

/// Taylor coefficients c_k = (1-|l|^2)^{gamma-1/p} (gamma)_k / k! conj(l)^k.
template <typename Real>
PowerSeries<Real> test_function(const TestParams<Real>& tp, Index n) {
    using C = std::complex<Real>;
    VectorC<Real> c(n + 1);
    const Real front = std::pow(Real(1) - std::norm(tp.lambda), tp.gamma - Real(1) / tp.p);
    const C lbar = std::conj(tp.lambda);
    C tail = 1;   // conj(l)^k
    Real rk = 1;  // (gamma)_k / k!
    for (Index k = 0; k <= n; ++k) {
        c[k] = front * rk * tail;
        tail *= lbar;
        rk *= (tp.gamma + static_cast<Real>(k)) / static_cast<Real>(k + 1);
    }
    return PowerSeries<Real>(std::move(c));
}

/// Closed-form vertex derivative
///   f^{(k)}(lambda) = (gamma)_k conj(lambda)^k / (1-|lambda|^2)^{k+1/p}.
template <typename Real>
std::complex<Real> vertex_derivative(const TestParams<Real>& tp, Index k) {
    using C = std::complex<Real>;
    C num = pochhammer(tp.gamma, k);
    for (Index t = 0; t < k; ++t) num *= std::conj(tp.lambda);
    return num / std::pow(Real(1) - std::norm(tp.lambda), static_cast<Real>(k) + Real(1) / tp.p);
}

/// Empirical uniform bound C_gamma = max over the lambda grid of the H^p norm
/// of the (truncated) family member.  n = 0 scales the truncation per lambda.
template <typename Real>
Real family_norm_bound(Real gamma, Real p, const std::vector<std::complex<Real>>& lambdas,
                       Index n = 0, Index m = 0) {
    Real best = 0;
    for (const auto& lambda : lambdas) {
        const Index deg = (n > 0) ? n : scaled_degree(lambda);
        const PowerSeries<Real> f = test_function(TestParams<Real>(lambda, gamma, p), deg);
        best = std::max(best, p_norm_boundary(f, p, m));
    }
    return best;
}

}  // namespace hardy
