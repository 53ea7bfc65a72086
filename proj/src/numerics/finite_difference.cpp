#include "pdm/finite_difference.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace pdm {

namespace {

// Coefficients are scaled by 1/(denominator * h^derivative_order). A boundary
// row applies to nodes 0..width-1; the right edge is its mirror image (negated
// for odd derivatives).
struct Scheme {
    int half_width;
    std::array<real, 5> interior;  // offsets -half_width..half_width
    int boundary_width;
    std::array<std::array<real, 6>, 2> boundary;  // rows for node 0 and node 1
    int boundary_rows;
    real denominator;
};

const Scheme& scheme(int derivative_order, Stencil stencil) {
    static const Scheme d1s2{1, {-1, 0, 1}, 3, {{{-3, 4, -1}}}, 1, 2};
    static const Scheme d2s2{1, {1, -2, 1}, 4, {{{2, -5, 4, -1}}}, 1, 1};
    static const Scheme d1s4{2, {1, -8, 0, 8, -1}, 5, {{{-25, 48, -36, 16, -3}, {-3, -10, 18, -6, 1}}}, 2, 12};
    static const Scheme d2s4{
        2, {-1, 16, -30, 16, -1}, 6, {{{45, -154, 214, -156, 61, -10}, {10, -15, -4, 14, -6, 1}}}, 2, 12};
    if (derivative_order == 1) return stencil == Stencil::second ? d1s2 : d1s4;
    if (derivative_order == 2) return stencil == Stencil::second ? d2s2 : d2s4;
    throw std::invalid_argument("derivative order must be 1 or 2");
}

template <typename T>
BasicGridFunction<T> apply(const BasicGridFunction<T>& f, int derivative_order, Stencil stencil) {
    const Scheme& s = scheme(derivative_order, stencil);
    const std::size_t n = f.size();
    if (n < static_cast<std::size_t>(s.boundary_width)) {
        throw GridError("grid too small for stencil: need at least " + std::to_string(s.boundary_width) + " points");
    }
    const real h = f.grid().h();
    const real scale = 1 / (s.denominator * (derivative_order == 1 ? h : h * h));
    const real mirror_sign = derivative_order == 1 ? -1 : 1;
    const std::size_t hw = static_cast<std::size_t>(s.half_width);

    BasicGridFunction<T> out(f.grid());
    for (std::size_t i = hw; i + hw < n; ++i) {
        T acc{};
        for (std::size_t k = 0; k <= 2 * hw; ++k) acc += s.interior[k] * f[i + k - hw];
        out[i] = acc * scale;
    }
    for (int row = 0; row < s.boundary_rows; ++row) {
        T left{}, right{};
        for (int k = 0; k < s.boundary_width; ++k) {
            left += s.boundary[row][k] * f[k];
            right += s.boundary[row][k] * f[n - 1 - k];
        }
        out[row] = left * scale;
        out[n - 1 - row] = right * (scale * mirror_sign);
    }
    return out;
}

}  // namespace

Stencil stencil_from_order(int order) {
    if (order == 2) return Stencil::second;
    if (order == 4) return Stencil::fourth;
    throw std::invalid_argument("stencil order must be 2 or 4");
}

RealGridFunction derivative(const RealGridFunction& f, int derivative_order, Stencil stencil) {
    return apply(f, derivative_order, stencil);
}

GridFunction derivative(const GridFunction& f, int derivative_order, Stencil stencil) {
    return apply(f, derivative_order, stencil);
}

}  // namespace pdm
