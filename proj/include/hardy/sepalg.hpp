#pragma once

#include <Eigen/LU>
#include <Eigen/SVD>

#include <algorithm>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

/// Distinct exponents gamma_0 < ... < gamma_{n-1} used as test-function
/// parameters; kept sorted so the Vandermonde product has a definite sign.
template <typename Real>
struct GammaSet {
    VectorR<Real> gammas;

    GammaSet() = default;

    explicit GammaSet(VectorR<Real> g) : gammas(std::move(g)) {
        for (Index i = 0; i + 1 < gammas.size(); ++i)
            if (!(gammas[i] < gammas[i + 1]))
                throw BadParams("GammaSet: gammas must be strictly ascending");
    }

    Index size() const { return gammas.size(); }
};

/// gamma_i = max(2, 1/p + 1) + i: integer spacing keeps the system well away
/// from singular while staying "sufficiently large" for the test family.
template <typename Real>
GammaSet<Real> default_gamma_set(Index n, Real p) {
    VectorR<Real> g(n);
    const Real base = std::max(Real(2), Real(1) / p + Real(1));
    for (Index i = 0; i < n; ++i) g[i] = base + static_cast<Real>(i);
    return GammaSet<Real>(std::move(g));
}

/// Rising factorial (gamma)_k = gamma (gamma+1) ... (gamma+k-1), (gamma)_0 = 1.
template <typename Real>
Real pochhammer(Real gamma, Index k) {
    Real r = 1;
    for (Index j = 0; j < k; ++j) r *= gamma + static_cast<Real>(j);
    return r;
}

/// Row i = ((gamma_i)_0, (gamma_i)_1, ..., (gamma_i)_{n-1}).
template <typename Real>
MatrixR<Real> pochhammer_matrix(const GammaSet<Real>& gs) {
    const Index n = gs.size();
    MatrixR<Real> m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = pochhammer(gs.gammas[i], j);
    return m;
}

/// prod_{i<j} (gamma_j - gamma_i); the determinant of the pochhammer matrix.
template <typename Real>
Real vandermonde_determinant(const GammaSet<Real>& gs) {
    Real det = 1;
    for (Index i = 0; i < gs.size(); ++i)
        for (Index j = i + 1; j < gs.size(); ++j) det *= gs.gammas[j] - gs.gammas[i];
    return det;
}

template <typename Real>
struct SeparationCoeffs {
    VectorR<Real> r;
    Real residual = 0;      // componentwise backward error of the system
    Real residual_abs = 0;  // max entry of |P^T r - e_k|
    Real condition = 0;     // sigma_max / sigma_min of the pochhammer matrix
};

/// Solve sum_i r_i (gamma_i)_j = delta_{jk} for j = 0..n-1: the coefficients
/// that pick the k-th component out of a bounded pochhammer combination.
///
/// Row scales of the system span ~8 orders of magnitude at n = 8, so the
/// quality measure is the componentwise backward error (`residual`); the raw
/// unit-RHS residual is reported alongside as `residual_abs`.
template <typename Real>
SeparationCoeffs<Real> separation_coefficients(const GammaSet<Real>& gs, Index k) {
    const Index n = gs.size();
    if (k < 0 || k >= n) throw BadParams("separation_coefficients: need 0 <= k < n");
    for (Index i = 0; i + 1 < n; ++i)
        if (std::abs(gs.gammas[i + 1] - gs.gammas[i]) < Real(1e-12)) throw SingularSystem();

    const MatrixR<Real> p = pochhammer_matrix(gs);
    VectorR<Real> e = VectorR<Real>::Zero(n);
    e[k] = 1;

    SeparationCoeffs<Real> out;
    const auto lu = p.transpose().partialPivLu();
    out.r = lu.solve(e);
    // refinement with the residual accumulated in extended precision; the
    // matrix entries reach ~1e8, so a plain double residual bottoms out early
    auto residual_vec = [&](const VectorR<Real>& r) {
        VectorR<Real> res(n);
        for (Index j = 0; j < n; ++j) {
            long double acc = -static_cast<long double>(e[j]);
            for (Index i = 0; i < n; ++i)
                acc += static_cast<long double>(p(i, j)) * static_cast<long double>(r[i]);
            res[j] = static_cast<Real>(acc);
        }
        return res;
    };
    for (int step = 0; step < 2; ++step) out.r -= lu.solve(residual_vec(out.r));
    const VectorR<Real> res = residual_vec(out.r);
    out.residual_abs = res.cwiseAbs().maxCoeff();
    out.residual = 0;
    for (Index j = 0; j < n; ++j) {
        const Real scale = p.col(j).cwiseAbs().dot(out.r.cwiseAbs()) + std::abs(e[j]);
        out.residual = std::max(out.residual, std::abs(res[j]) / scale);
    }
    Eigen::JacobiSVD<MatrixR<Real>> svd(p);
    const auto& sv = svd.singularValues();
    out.condition = sv(0) / sv(sv.size() - 1);
    return out;
}

/// sum_i |r_i| C_{gamma_i}: the bound on the separated component.
template <typename Real>
Real separated_bound(const VectorR<Real>& c, const VectorR<Real>& r) {
    if (c.size() != r.size()) throw BadParams("separated_bound: length mismatch");
    return r.cwiseAbs().dot(c);
}

}  // namespace hardy
