#pragma once

#include <string>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

/// Polar evaluation grid: the radial ladder 1 - 2^{-i} (optionally with 0 in
/// front, where suprema like (1-|z|^2)|f'| are often attained) crossed with
/// equispaced angles.  Refinement deepens the ladder and doubles the angles,
/// so refined grids contain the original points.
template <typename Real>
struct DiscGrid {
    Index depth = 12;
    Index n_angles = 64;
    bool include_zero = true;

    std::vector<Real> radii() const {
        std::vector<Real> r;
        if (include_zero) r.push_back(Real(0));
        Real gap = Real(0.5);
        for (Index i = 1; i <= depth; ++i, gap /= 2) r.push_back(Real(1) - gap);
        return r;
    }

    std::vector<std::complex<Real>> points() const {
        std::vector<std::complex<Real>> out;
        for (Real r : radii()) {
            if (r == Real(0)) {
                out.emplace_back(Real(0), Real(0));
                continue;
            }
            for (Index j = 0; j < n_angles; ++j)
                out.push_back(std::polar(
                    r, Real(2) * pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(n_angles)));
        }
        return out;
    }

    DiscGrid refined() const { return DiscGrid{depth + 1, 2 * n_angles, include_zero}; }

    std::string descriptor() const {
        return "ladder(depth=" + std::to_string(depth) + (include_zero ? ",0" : "") +
               ") x angles=" + std::to_string(n_angles);
    }
};

/// Deterministic supremum of fn over the grid (index-ordered reduction).
template <typename Real, typename Fn>
Real sup_over_grid(const DiscGrid<Real>& grid, Fn&& fn) {
    Real best = 0;
    for (const auto& z : grid.points()) best = std::max(best, static_cast<Real>(fn(z)));
    return best;
}

template <typename Real>
DiscGrid<Real> default_disc_grid() {
    return DiscGrid<Real>{12, 64, true};
}

/// Lambda grids for probe/Garsia sweeps: shallower ladder, 16 angles.
template <typename Real>
DiscGrid<Real> default_lambda_grid(Index depth = 5, Index n_angles = 16) {
    return DiscGrid<Real>{depth, n_angles, true};
}

}  // namespace hardy
