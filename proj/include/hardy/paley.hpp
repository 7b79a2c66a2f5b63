#pragma once

#include <utility>

#include "hardy/spaces.hpp"

namespace hardy {

/// Non-tangential approach region: interior of the convex hull of the
/// boundary point e^{i theta} and the disc D(0, sigma).
template <typename Real>
struct StolzAngle {
    Real theta = 0;
    Real sigma = Real(0.5);
};

/// Quadrature on (0,1) for the radial measures (1-r)^m dr.
template <typename Real>
struct RadialQuad {
    VectorR<Real> nodes;
    VectorR<Real> weights;
};

/// Gauss-Legendre nodes/weights on [-1,1]; Newton iteration on the Legendre
/// recurrence, good to ~1e-15 for the node counts used here.
template <typename Real>
std::pair<VectorR<Real>, VectorR<Real>> gauss_legendre(Index n) {
    VectorR<Real> x(n), w(n);
    const Index half = (n + 1) / 2;
    for (Index i = 0; i < half; ++i) {
        Real z = std::cos(pi_v<Real> * (static_cast<Real>(i) + Real(0.75)) /
                          (static_cast<Real>(n) + Real(0.5)));
        Real dp = 0;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = 0;
            for (Index j = 0; j < n; ++j) {
                const Real p2 = p1;
                p1 = p0;
                p0 = ((2 * static_cast<Real>(j) + 1) * z * p1 - static_cast<Real>(j) * p2) /
                     static_cast<Real>(j + 1);
            }
            dp = static_cast<Real>(n) * (z * p0 - p1) / (z * z - 1);
            const Real dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < Real(1e-15)) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = Real(2) / ((Real(1) - z * z) * dp * dp);
    }
    return {std::move(x), std::move(w)};
}

/// Gauss-Legendre mapped to (0,1): exact for polynomial degree <= 2n-1.
template <typename Real>
RadialQuad<Real> radial_quad(Index n) {
    auto [x, w] = gauss_legendre<Real>(n);
    RadialQuad<Real> q;
    q.nodes = ((x.array() + Real(1)) / Real(2)).matrix();
    q.weights = (w.array() / Real(2)).matrix();
    return q;
}

/// Node count that integrates (1-r)^{2k-1} |f^{(k)}|^2 exactly for a series
/// of degree n.
template <typename Real>
Index gk_node_count(Index degree, Index k) {
    return degree + k + 2;
}

/// G(f)(theta) = ( int_0^1 |f'(r e^{i theta})|^2 (1-r) dr )^{1/2}.
template <typename Real>
Real g_function(const PowerSeries<Real>& f, Real theta, const RadialQuad<Real>& quad) {
    const PowerSeries<Real> d = derivative(f, 1);
    Real acc = 0;
    for (Index i = 0; i < quad.nodes.size(); ++i) {
        const Real r = quad.nodes[i];
        acc += quad.weights[i] * std::norm(eval(d, std::polar(r, theta))) * (Real(1) - r);
    }
    return std::sqrt(acc);
}

/// G_k(f)(theta) = ( int_0^1 |f^{(k)}(r e^{i theta})|^2 (1-r)^{2k-1} dr )^{1/2}.
template <typename Real>
Real gk_function(const PowerSeries<Real>& f, Index k, Real theta, const RadialQuad<Real>& quad) {
    if (k < 1) throw BadParams("gk_function: need k >= 1");
    const PowerSeries<Real> d = derivative(f, k);
    Real acc = 0;
    for (Index i = 0; i < quad.nodes.size(); ++i) {
        const Real r = quad.nodes[i];
        acc += quad.weights[i] * std::norm(eval(d, std::polar(r, theta))) *
               std::pow(Real(1) - r, Real(2 * k - 1));
    }
    return std::sqrt(acc);
}

/// L^p norm over angles of G_k(f): ((1/M) sum_j G_k(f)(theta_j)^p)^{1/p}.
template <typename Real>
Real gk_lp_norm(const PowerSeries<Real>& f, Index k, Real p, Index n_angles,
                const RadialQuad<Real>& quad) {
    if (!(p > 0)) throw BadExponent("gk_lp_norm: need p > 0");
    if (k < 1) throw BadParams("gk_lp_norm: need k >= 1");
    const PowerSeries<Real> d = derivative(f, k);
    Real acc = 0;
    for (Index j = 0; j < n_angles; ++j) {
        const Real theta = Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(n_angles);
        Real g2 = 0;
        for (Index i = 0; i < quad.nodes.size(); ++i) {
            const Real r = quad.nodes[i];
            g2 += quad.weights[i] * std::norm(eval(d, std::polar(r, theta))) *
                  std::pow(Real(1) - r, Real(2 * k - 1));
        }
        acc += std::pow(std::sqrt(g2), p);
    }
    return std::pow(acc / static_cast<Real>(n_angles), Real(1) / p);
}

/// Distance-to-aperture for the Stolz region: min over t in (0,1] of
/// |z - (1-t) e^{i theta}| / t.  z lies in the region iff this is <= sigma.
/// Writing s = 1/t >= 1 the objective |v + s u| (v the vertex, u = z - v) is
/// convex, so the minimizer is closed-form.
template <typename Real>
Real stolz_distance(const StolzAngle<Real>& stolz, std::complex<Real> z) {
    using C = std::complex<Real>;
    const C v = std::polar(Real(1), stolz.theta);
    const C u = z - v;
    const Real uu = std::norm(u);
    if (uu == 0) return 0;  // the vertex itself
    const Real b = (std::conj(v) * u).real();
    const Real s_star = -b / uu;
    if (s_star <= 1) return std::abs(z);  // constrained minimum at t = 1
    return std::sqrt(std::max(Real(0), Real(1) - b * b / uu));
}

template <typename Real>
bool stolz_contains(const StolzAngle<Real>& stolz, std::complex<Real> z) {
    return stolz_distance(stolz, z) <= stolz.sigma;
}

/// Tensor quadrature for normalized-area integrals over the unit disc:
/// Gauss-Legendre in s = r^2 crossed with equispaced angles; weights sum to 1.
template <typename Real>
struct DiscQuad {
    VectorR<Real> radii;
    VectorR<Real> weights;  // radial weights, sum to 1
    Index n_angles = 64;
};

template <typename Real>
DiscQuad<Real> disc_quad(Index n_radial, Index n_angles) {
    RadialQuad<Real> q = radial_quad<Real>(n_radial);
    DiscQuad<Real> d;
    d.radii = q.nodes.array().sqrt().matrix();
    d.weights = q.weights;
    d.n_angles = n_angles;
    return d;
}

/// Normalized-area integral of fn over the unit disc.
template <typename Real, typename Fn>
Real disc_integral(const DiscQuad<Real>& quad, Fn&& fn) {
    Real acc = 0;
    for (Index i = 0; i < quad.radii.size(); ++i) {
        Real ring = 0;
        for (Index j = 0; j < quad.n_angles; ++j) {
            const Real theta =
                Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(quad.n_angles);
            ring += static_cast<Real>(fn(std::polar(quad.radii[i], theta)));
        }
        acc += quad.weights[i] * ring / static_cast<Real>(quad.n_angles);
    }
    return acc;
}

/// Lusin area function S_f = ( int_{Stolz} |f'|^2 dA )^{1/2} with dA the
/// normalized area measure.
template <typename Real>
Real lusin_area(const PowerSeries<Real>& f, const StolzAngle<Real>& stolz,
                const DiscQuad<Real>& quad) {
    const PowerSeries<Real> d = derivative(f, 1);
    const Real s2 = disc_integral(quad, [&](std::complex<Real> z) {
        return stolz_contains(stolz, z) ? std::norm(eval(d, z)) : Real(0);
    });
    return std::sqrt(s2);
}

/// ( |f(0)|^p + (1/M) sum_j S_f(theta_j)^p ) / ||f||_p^p : the two-sided
/// square-function equivalence probed as a single ratio.
template <typename Real>
Real fefferman_stein_ratio(const PowerSeries<Real>& f, Real p, Real sigma, Index n_angles,
                           const DiscQuad<Real>& quad, Index m_norm = 0) {
    if (!(p > 0)) throw BadExponent("fefferman_stein_ratio: need p > 0");
    const Real denom = p_norm_boundary(f, p, m_norm);
    if (denom <= 0) throw ZeroFunction();

    // cache |f'|^2 on the grid; each vertex then sums its masked nodes
    const PowerSeries<Real> d = derivative(f, 1);
    const Index nr = quad.radii.size(), na = quad.n_angles;
    MatrixR<Real> val(nr, na);
    for (Index i = 0; i < nr; ++i)
        for (Index j = 0; j < na; ++j) {
            const Real theta = Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(na);
            val(i, j) = std::norm(eval(d, std::polar(quad.radii[i], theta)));
        }

    Real acc = 0;
    for (Index v = 0; v < n_angles; ++v) {
        const StolzAngle<Real> stolz{Real(2) * pi_v<Real> * static_cast<Real>(v) /
                                         static_cast<Real>(n_angles),
                                     sigma};
        Real s2 = 0;
        for (Index i = 0; i < nr; ++i) {
            Real ring = 0;
            for (Index j = 0; j < na; ++j) {
                const Real theta = Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(na);
                if (stolz_contains(stolz, std::polar(quad.radii[i], theta))) ring += val(i, j);
            }
            s2 += quad.weights[i] * ring / static_cast<Real>(na);
        }
        acc += std::pow(std::sqrt(s2), p);
    }
    acc /= static_cast<Real>(n_angles);

    const Real f0 = std::abs(f.coeff(0));
    return (std::pow(f0, p) + acc) / std::pow(denom, p);
}

/// Pointwise derivative bound against the local area integral:
///   lhs = |f^{(n)}(z)|^2,
///   rhs = n!(n-1)! 2^{2n} (1-|z|)^{-2n} * int_{D(z,(1-|z|)/2)} |f'|^2 dA.
/// Contract: lhs <= rhs up to quadrature roundoff.
template <typename Real>
std::pair<Real, Real> derivative_area_bound(const PowerSeries<Real>& f, std::complex<Real> z,
                                            Index n, const DiscQuad<Real>& quad) {
    if (n < 1) throw BadParams("derivative_area_bound: need n >= 1");
    if (!(std::abs(z) < 1)) throw BadParams("derivative_area_bound: need |z| < 1");
    const Real lhs = std::norm(eval_derivative(f, n, z));

    const Real radius = (Real(1) - std::abs(z)) / Real(2);
    const PowerSeries<Real> d = derivative(f, 1);
    // D(z, R) integral via the unit-disc rule: zeta = z + R xi scales dA by R^2
    const Real local = radius * radius * disc_integral(quad, [&](std::complex<Real> xi) {
        return std::norm(eval(d, z + radius * xi));
    });

    Real fac = 1;  // n!(n-1)!
    for (Index t = 2; t <= n; ++t) fac *= static_cast<Real>(t);
    for (Index t = 2; t <= n - 1; ++t) fac *= static_cast<Real>(t);
    const Real rhs = fac * std::pow(Real(2), Real(2 * n)) /
                     std::pow(Real(1) - std::abs(z), Real(2 * n)) * local;
    return {lhs, rhs};
}

}  // namespace hardy
