#pragma once

#include "pdm/grid.hpp"

namespace pdm {

/// Accuracy order of a finite-difference stencil.
enum class Stencil { second = 2, fourth = 4 };

/// Throws std::invalid_argument unless `order` is 2 or 4.
Stencil stencil_from_order(int order);
inline int accuracy_order(Stencil s) noexcept { return static_cast<int>(s); }

/// First (`derivative_order` = 1) or second (= 2) derivative. Central
/// differences in the interior; one-sided stencils of the same accuracy order at
/// the boundary nodes. Throws GridError when the grid has fewer points than the
/// boundary stencil needs (3/4 points for second order, 5/6 for fourth order).
RealGridFunction derivative(const RealGridFunction& f, int derivative_order, Stencil stencil);
GridFunction derivative(const GridFunction& f, int derivative_order, Stencil stencil);

}  // namespace pdm
