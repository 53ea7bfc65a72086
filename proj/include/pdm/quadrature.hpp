#pragma once

#include <cstddef>
#include <vector>

#include "pdm/grid.hpp"
#include "pdm/profile.hpp"

namespace pdm {

/// Gauss–Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<real> nodes;
    std::vector<real> weights;

    explicit GaussLegendre(std::size_t points);
};

/// Nodes per cell used for the sqrt(m) antiderivative.
inline constexpr std::size_t antiderivative_gauss_points = 8;

/// Composite Simpson over the whole grid; when the interval count is odd the
/// last three intervals use Simpson's 3/8 rule.
complex integrate(const GridFunction& f);
real integrate(const RealGridFunction& f);

/// ∫ f g dx, no conjugation.
complex bilinear_pair(const GridFunction& f, const GridFunction& g);
/// ∫ conj(f) g dx.
complex sesquilinear_pair(const GridFunction& f, const GridFunction& g);

/// sqrt(h * Σ|f_i|²), the grid 2-norm scaled so values are comparable across grid sizes.
real l2_norm(const GridFunction& f);

/// F(x_i) = ∫_{anchor}^{x_i} sqrt(m(t)) dt by per-cell Gauss–Legendre quadrature,
/// accumulated outward from the anchor. F(anchor) = 0 exactly; the cell holding a
/// non-node anchor is split there. Throws PositivityError if m falls below the
/// floor at a quadrature node and std::invalid_argument if the anchor lies
/// outside the grid.
RealGridFunction cumulative_antiderivative_sqrt_m(const MassProfile& profile, const Grid& grid, real anchor);

/// Pointwise ∫_{anchor}^{x} sqrt(m) dt with composite Gauss–Legendre on panels of
/// width at most `max_panel`.
real antiderivative_sqrt_m(const MassProfile& profile, real anchor, real x, real max_panel = 0.01L);

}  // namespace pdm
