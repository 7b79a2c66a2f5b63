#pragma once

#include <vector>

#include "hardy/boundary.hpp"
#include "hardy/grids.hpp"
#include "hardy/operators.hpp"

namespace hardy {

/// f^{(n)} = F G_n^{(n)} with F outer-type positive and G_n of bounded mean
/// oscillation; residual_sup is the max of |f^{(n)} - F G_n^{(n)}| on the
/// reporting grid |z| <= 0.9.
template <typename Real>
struct FactorizationResult {
    PowerSeries<Real> F;
    PowerSeries<Real> G_n;
    Real residual_sup = 0;
    Index zero_order = 0;  // power of z factored out of f before dividing
};

/// Reporting grid for factorization residuals: the |z| <= 0.9 ladder,
/// boundary ring included, crossed with 16 angles.
template <typename Real>
std::vector<std::complex<Real>> factor_report_points() {
    std::vector<std::complex<Real>> pts = {std::complex<Real>(0)};
    for (Real r : {Real(0.5), Real(0.75), Real(0.875), Real(0.9)})
        for (Index j = 0; j < 16; ++j)
            pts.push_back(std::polar(r, Real(2) * pi_v<Real> * static_cast<Real>(j) / Real(16)));
    return pts;
}

/// The inner Herglotz series H with Re H = Poisson extension of |f|^{p/2}.
template <typename Real>
PowerSeries<Real> outer_herglotz(const PowerSeries<Real>& f, Real p, Index m, Index n) {
    if (!(p > 0)) throw BadExponent("outer_herglotz: need p > 0");
    if (f.is_zero()) throw ZeroFunction();
    BoundaryFunction<Real> u = sample(f, Real(1), m);
    for (Index j = 0; j < m; ++j) u.samples[j] = std::pow(std::abs(u.samples[j]), p / Real(2));
    return herglotz(u, n);
}

/// F = H(|f|^{p/2})^{2/p}: positive real part inside, |F| >= |f| on the
/// boundary.
template <typename Real>
PowerSeries<Real> outer_positive(const PowerSeries<Real>& f, Real p, Index m, Index n) {
    return pow(outer_herglotz(f, p, m, n), std::complex<Real>(Real(2) / p));
}

/// Factor f^{(n)} = F G_n^{(n)}: G_0 = f / F, then
///   G_k = I^k( G_{k-1}^{(k-1)} (log F)' ) + G_{k-1},   k = 1..n.
/// A zero of order m at the origin is moved out of the division and restored
/// on G_0 (the boundary data, hence F, is unchanged by it).
template <typename Real>
FactorizationResult<Real> factor_derivative(const PowerSeries<Real>& f, Real p, Index n, Index m,
                                            Index degree) {
    using C = std::complex<Real>;
    if (f.is_zero()) throw ZeroFunction();

    const PowerSeries<Real> h = outer_herglotz(f, p, m, degree);
    FactorizationResult<Real> out;
    out.F = pow(h, C(Real(2) / p));
    const PowerSeries<Real> log_f = (Real(2) / p) * log(h);
    const PowerSeries<Real> dlog = derivative(log_f, 1);

    out.zero_order = std::max<Index>(vanishing_order(f), 0);
    PowerSeries<Real> cofactor = shift_down(f, out.zero_order);
    PowerSeries<Real> g = shift_up(div(padded(cofactor, degree - out.zero_order), out.F),
                                   out.zero_order);

    for (Index k = 1; k <= n; ++k) g = integrate(mul(derivative(g, k - 1), dlog), k) + g;
    out.G_n = g;

    const PowerSeries<Real> fn = derivative(f, n);
    const PowerSeries<Real> reconstructed = mul(out.F, derivative(g, n));
    Real sup = 0;
    for (const auto& z : factor_report_points<Real>())
        sup = std::max(sup, std::abs(eval(fn, z) - eval(reconstructed, z)));
    out.residual_sup = sup;
    return out;
}

/// Linear ODE data
///   G^{(n)} f + g_1^{(n-1)} f' + ... + g_{n-1}' f^{(n-1)} + f^{(n)} = f0^{(n)}
/// with initial jet f^{(i)}(0) = init[i], i < n.
template <typename Real>
struct OdeProblem {
    Index n = 1;
    PowerSeries<Real> G;
    std::vector<PowerSeries<Real>> g;  // g_1 .. g_{n-1}
    PowerSeries<Real> f0;
    VectorC<Real> init;

    void validate() const {
        if (n < 1) throw BadParams("OdeProblem: need n >= 1");
        if (static_cast<Index>(g.size()) != n - 1)
            throw BadParams("OdeProblem: need n-1 lower-order symbols");
        if (init.size() != n) throw BadParams("OdeProblem: need n initial values");
    }
};

/// Exact forward coefficient recursion: coefficient m of the equation
/// determines c_{m+n} from c_0..c_{m+n-1}, so the solution jet propagates in
/// a single pass.
template <typename Real>
PowerSeries<Real> solve_ode(const OdeProblem<Real>& prob, Index degree) {
    using C = std::complex<Real>;
    prob.validate();
    const Index n = prob.n;
    if (degree < n) throw BadParams("solve_ode: need N >= n");

    // d_i = coefficient series multiplying f^{(i)}
    std::vector<PowerSeries<Real>> d(n);
    d[0] = derivative(prob.G, n);
    for (Index i = 1; i < n; ++i) d[i] = derivative(prob.g[i - 1], n - i);
    const PowerSeries<Real> rhs = derivative(prob.f0, n);

    VectorC<Real> c = VectorC<Real>::Zero(degree + 1);
    Real ifac = 1;
    for (Index i = 0; i < n; ++i) {
        if (i > 0) ifac *= static_cast<Real>(i);
        c[i] = prob.init[i] / ifac;
    }

    for (Index m = 0; m + n <= degree; ++m) {
        C acc = rhs.coeff(m);
        for (Index i = 0; i < n; ++i) {
            const Index jmax = std::min(m, d[i].degree());
            for (Index j = 0; j <= jmax; ++j) {
                const C dij = d[i].coeff(j);
                if (dij == C(0)) continue;
                // (f^{(i)})_{m-j} = (m-j+i)!/(m-j)! c_{m-j+i}
                Real fac = 1;
                for (Index t = 1; t <= i; ++t) fac *= static_cast<Real>(m - j + t);
                acc -= dij * fac * c[m - j + i];
            }
        }
        Real fac = 1;  // (m+n)!/m!
        for (Index t = 1; t <= n; ++t) fac *= static_cast<Real>(m + t);
        c[m + n] = acc / fac;
    }
    return PowerSeries<Real>(std::move(c));
}

/// Residual series of the ODE for a candidate solution (valid through
/// degree N - n of the candidate).
template <typename Real>
PowerSeries<Real> ode_residual(const OdeProblem<Real>& prob, const PowerSeries<Real>& f) {
    prob.validate();
    PowerSeries<Real> acc = mul(derivative(prob.G, prob.n), f) + derivative(f, prob.n) -
                            derivative(prob.f0, prob.n);
    for (Index i = 1; i < prob.n; ++i)
        acc = acc + mul(derivative(prob.g[i - 1], prob.n - i), derivative(f, i));
    return acc;
}

/// Herglotz weight G = H( |g|^a / (1+eps|g|)^a )^b built from boundary data
/// of the symbol; Re of G^{1/b} is positive and |G| dominates the damped
/// modulus on the boundary.
template <typename Real>
PowerSeries<Real> herglotz_weight(const PowerSeries<Real>& g, Real alpha, Real beta, Real eps,
                                  Index m, Index n) {
    if (!(alpha > 0) || !(beta > 0)) throw BadExponent("herglotz_weight: need alpha, beta > 0");
    if (eps < 0) throw BadParams("herglotz_weight: need eps >= 0");
    if (g.is_zero()) throw ZeroFunction();
    BoundaryFunction<Real> u = sample(g, Real(1), m);
    for (Index j = 0; j < m; ++j) {
        const Real a = std::abs(u.samples[j]);
        u.samples[j] = std::pow(a / (Real(1) + eps * a), alpha);
    }
    return pow(herglotz(u, n), std::complex<Real>(beta));
}

}  // namespace hardy
