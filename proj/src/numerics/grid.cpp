#include "pdm/grid.hpp"

#include <algorithm>

namespace pdm {

Grid::Grid(real x_min, real x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n), h_(0) {
    if (!(std::isfinite(x_min) && std::isfinite(x_max)) || !(x_min < x_max)) {
        throw GridError("grid requires finite x_min < x_max");
    }
    if (n < min_points) throw GridError("grid requires at least 5 points");
    h_ = (x_max - x_min) / static_cast<real>(n - 1);
}

std::size_t Grid::nearest(real x) const noexcept {
    const real t = std::round((x - x_min_) / h_);
    if (t <= 0) return 0;
    return std::min(static_cast<std::size_t>(t), n_ - 1);
}

GridFunction sample(const std::function<complex(real)>& f, const Grid& grid) {
    GridFunction out(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const complex v = f(grid.x(i));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw NonFiniteError(i, grid.x(i));
        out[i] = v;
    }
    return out;
}

RealGridFunction sample_real(const std::function<real(real)>& f, const Grid& grid) {
    RealGridFunction out(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const real v = f(grid.x(i));
        if (!std::isfinite(v)) throw NonFiniteError(i, grid.x(i));
        out[i] = v;
    }
    return out;
}

GridFunction to_complex(const RealGridFunction& f) {
    GridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
    return out;
}

GridFunction conj(const GridFunction& f) {
    GridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::conj(f[i]);
    return out;
}

RealGridFunction real_part(const GridFunction& f) {
    RealGridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
    return out;
}

RealGridFunction imag_part(const GridFunction& f) {
    RealGridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].imag();
    return out;
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a.grid(), b.grid());
    GridFunction out(a.grid());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a.grid(), b.grid());
    GridFunction out(a.grid());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

GridFunction operator*(complex s, const GridFunction& f) {
    GridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = s * f[i];
    return out;
}

GridFunction operator*(const RealGridFunction& a, const GridFunction& b) {
    require_same_grid(a.grid(), b.grid());
    GridFunction out(a.grid());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    require_same_grid(a.grid(), b.grid());
    GridFunction out(a.grid());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

real max_abs(const GridFunction& f) {
    real m = 0;
    for (const complex& v : f) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace pdm
