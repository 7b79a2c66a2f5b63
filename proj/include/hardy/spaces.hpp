#pragma once

#include <string>
#include <vector>

#include "hardy/boundary.hpp"
#include "hardy/grids.hpp"

namespace hardy {

/// A grid-based norm estimate.  `converged` is set only when doubling the
/// grid moved the value by less than 1%.
template <typename Real>
struct NormEstimate {
    Real value = 0;
    Index truncation_degree = 0;
    std::string grid_descriptor;
    bool converged = false;
};

template <typename Real>
struct DecayProfile {
    VectorR<Real> radii;
    VectorR<Real> values;
};

template <typename Real>
struct DegreeProfile {
    std::vector<Index> degrees;
    VectorR<Real> values;
};

enum class ProfileKind { bloch, garsia };

namespace detail {

template <typename Real>
bool close_within(Real a, Real b, Real rel) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), Real(1e-300)});
}

template <typename Real>
NormEstimate<Real> doubling_estimate(Real base, Real refined, Index degree, std::string descr) {
    NormEstimate<Real> e;
    e.value = refined;
    e.truncation_degree = degree;
    e.grid_descriptor = std::move(descr);
    e.converged = close_within(base, refined, Real(0.01));
    return e;
}

}  // namespace detail

inline Index default_samples(Index degree) { return 8 * (degree + 1); }

/// p-mean of |f| on the unit circle; the raw quadrature behind hardy_norm.
template <typename Real>
Real p_norm_boundary(const PowerSeries<Real>& f, Real p, Index m = 0) {
    if (m <= 0) m = default_samples(f.degree());
    return p_mean(sample(f, Real(1), m), p);
}

/// H^p norm of a truncated series.  Integral means increase with the radius,
/// so for a polynomial the supremum over radii is the r = 1 mean.
template <typename Real>
NormEstimate<Real> hardy_norm(const PowerSeries<Real>& f, Real p, Index m = 0) {
    if (!(p > 0)) throw BadExponent("hardy_norm: need p > 0");
    if (m <= 0) m = default_samples(f.degree());
    const Real base = p_norm_boundary(f, p, m);
    const Real refined = p_norm_boundary(f, p, 2 * m);
    return detail::doubling_estimate(base, refined, f.degree(),
                                     "circle M=" + std::to_string(2 * m));
}

/// sup over the grid of (1-|z|^2) |f'(z)|.
template <typename Real>
NormEstimate<Real> bloch_norm(const PowerSeries<Real>& f,
                              const DiscGrid<Real>& grid = default_disc_grid<Real>()) {
    const PowerSeries<Real> d = derivative(f, 1);
    auto local = [&](std::complex<Real> z) { return (Real(1) - std::norm(z)) * std::abs(eval(d, z)); };
    const Real base = sup_over_grid(grid, local);
    const DiscGrid<Real> fine = grid.refined();
    const Real refined = sup_over_grid(fine, local);
    return detail::doubling_estimate(base, refined, f.degree(), fine.descriptor());
}

/// sup over the grid of |f^{(k)}(z)| (1-|z|^2)^w.
template <typename Real>
NormEstimate<Real> weighted_deriv_sup(const PowerSeries<Real>& f, Index k, Real w,
                                      const DiscGrid<Real>& grid = default_disc_grid<Real>()) {
    const PowerSeries<Real> d = derivative(f, k);
    auto local = [&](std::complex<Real> z) {
        return std::pow(Real(1) - std::norm(z), w) * std::abs(eval(d, z));
    };
    const Real base = sup_over_grid(grid, local);
    const DiscGrid<Real> fine = grid.refined();
    const Real refined = sup_over_grid(fine, local);
    return detail::doubling_estimate(base, refined, f.degree(), fine.descriptor());
}

/// ||f o phi_lambda - f(lambda)||_{H^2} by quadrature at the M-th roots of
/// unity; phi_lambda maps the circle to itself, so f is evaluated by Horner at
/// unit-modulus points.
template <typename Real>
Real garsia_local(const PowerSeries<Real>& f, std::complex<Real> lambda, Index m) {
    using C = std::complex<Real>;
    const C fl = eval(f, lambda);
    Real acc = 0;
    for (Index j = 0; j < m; ++j) {
        const C zeta = std::polar(Real(1), Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(m));
        const C phi = (lambda - zeta) / (Real(1) - std::conj(lambda) * zeta);
        acc += std::norm(eval(f, phi) - fl);
    }
    return std::sqrt(acc / static_cast<Real>(m));
}

/// Garsia norm sup_lambda ||f o phi_lambda - f(lambda)||_{H^2}: the BMOA
/// membership estimator used throughout (reports label it "estimator: garsia").
template <typename Real>
NormEstimate<Real> garsia_norm(const PowerSeries<Real>& f,
                               const DiscGrid<Real>& grid = default_lambda_grid<Real>(),
                               Index m = 4096) {
    auto local = [&](std::complex<Real> z) { return garsia_local(f, z, m); };
    const Real base = sup_over_grid(grid, local);
    const DiscGrid<Real> fine = grid.refined();
    const Real refined = sup_over_grid(fine, local);
    NormEstimate<Real> e = detail::doubling_estimate(base, refined, f.degree(),
                                                     fine.descriptor() + " garsia M=" + std::to_string(m));
    return e;
}

/// Per-radius suprema of the local Bloch / Garsia quantity; the trend along
/// radii -> 1 is the little-Bloch / VMOA membership evidence.
template <typename Real>
DecayProfile<Real> decay_profile(const PowerSeries<Real>& f, ProfileKind kind,
                                 const std::vector<Real>& radii, Index n_angles = 16,
                                 Index m = 4096) {
    if (radii.size() < 2) throw BadParams("decay_profile: need at least two radii");
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (!(radii[i] > 0 && radii[i] < 1 && (i == 0 || radii[i] > radii[i - 1])))
            throw BadParams("decay_profile: radii must be ascending in (0,1)");
    const PowerSeries<Real> d = derivative(f, 1);
    DecayProfile<Real> prof;
    prof.radii.resize(radii.size());
    prof.values.resize(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const Real r = radii[i];
        Real best = 0;
        for (Index j = 0; j < n_angles; ++j) {
            const std::complex<Real> z =
                std::polar(r, Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(n_angles));
            const Real v = (kind == ProfileKind::bloch)
                               ? (Real(1) - std::norm(z)) * std::abs(eval(d, z))
                               : garsia_local(f, z, m);
            best = std::max(best, v);
        }
        prof.radii[i] = r;
        prof.values[i] = best;
    }
    return prof;
}

/// Lipschitz class estimator via the second-derivative characterization
/// sup (1-|z|)^{2-beta} |f''(z)|, valid for every beta in (0,1] including the
/// Zygmund endpoint beta = 1.
template <typename Real>
NormEstimate<Real> lipschitz_norm(const PowerSeries<Real>& f, Real beta,
                                  const DiscGrid<Real>& grid = default_disc_grid<Real>()) {
    if (!(beta > 0 && beta <= 1)) throw BadExponent("lipschitz_norm: need 0 < beta <= 1");
    const PowerSeries<Real> d2 = derivative(f, 2);
    auto local = [&](std::complex<Real> z) {
        return std::pow(Real(1) - std::abs(z), Real(2) - beta) * std::abs(eval(d2, z));
    };
    const Real base = sup_over_grid(grid, local);
    const DiscGrid<Real> fine = grid.refined();
    const Real refined = sup_over_grid(fine, local);
    return detail::doubling_estimate(base, refined, f.degree(), fine.descriptor());
}

/// sum_k k |c_k|^2 = integral of |f'|^2 over the disc in normalized area.
template <typename Real>
Real dirichlet_integral(const PowerSeries<Real>& f) {
    Real acc = 0;
    for (Index k = 1; k <= f.degree(); ++k) acc += static_cast<Real>(k) * std::norm(f.coeffs[k]);
    return acc;
}

/// H^s norms of successive truncations; a bounded trend is H^s membership
/// evidence for a symbol given by a coefficient rule.
template <typename Real>
DegreeProfile<Real> hs_profile(const PowerSeries<Real>& f, Real s,
                               const std::vector<Index>& degrees) {
    if (!(s > 0)) throw BadExponent("hs_profile: need s > 0");
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1]) throw BadParams("hs_profile: degrees must ascend");
    DegreeProfile<Real> prof;
    prof.degrees = degrees;
    prof.values.resize(static_cast<Index>(degrees.size()));
    for (std::size_t i = 0; i < degrees.size(); ++i)
        prof.values[static_cast<Index>(i)] = hardy_norm(truncated(f, degrees[i]), s).value;
    return prof;
}

}  // namespace hardy
