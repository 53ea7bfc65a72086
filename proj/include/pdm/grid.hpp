#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pdm/errors.hpp"
#include "pdm/types.hpp"

namespace pdm {

/// Uniform 1-D grid: x_i = x_min + i*h, i = 0..n-1.
class Grid {
public:
    static constexpr std::size_t min_points = 5;

    Grid(real x_min, real x_max, std::size_t n);

    real x_min() const noexcept { return x_min_; }
    real x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return n_; }
    real h() const noexcept { return h_; }
    real x(std::size_t i) const noexcept { return x_min_ + static_cast<real>(i) * h_; }

    /// Index of the node closest to `x`, clamped to the grid.
    std::size_t nearest(real x) const noexcept;

    friend bool operator==(const Grid& a, const Grid& b) noexcept {
        return a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_ && a.n_ == b.n_;
    }

private:
    real x_min_;
    real x_max_;
    std::size_t n_;
    real h_;
};

/// Samples of a function on a grid. Length always equals the grid size.
template <typename T>
class BasicGridFunction {
public:
    using value_type = T;

    explicit BasicGridFunction(Grid grid) : grid_(grid), values_(grid.size(), T{}) {}
    BasicGridFunction(Grid grid, std::vector<T> values) : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.size()) throw GridError("grid function length does not match grid");
    }

    const Grid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }

    T& operator[](std::size_t i) noexcept { return values_[i]; }
    const T& operator[](std::size_t i) const noexcept { return values_[i]; }

    std::span<const T> values() const noexcept { return values_; }
    std::span<T> values() noexcept { return values_; }

    auto begin() noexcept { return values_.begin(); }
    auto end() noexcept { return values_.end(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

private:
    Grid grid_;
    std::vector<T> values_;
};

using GridFunction = BasicGridFunction<complex>;
using RealGridFunction = BasicGridFunction<real>;

inline void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw GridError("grid functions live on different grids");
}

/// values[i] = f(x_i). Throws NonFiniteError naming the first bad node.
GridFunction sample(const std::function<complex(real)>& f, const Grid& grid);
RealGridFunction sample_real(const std::function<real(real)>& f, const Grid& grid);

GridFunction to_complex(const RealGridFunction& f);
GridFunction conj(const GridFunction& f);
RealGridFunction real_part(const GridFunction& f);
RealGridFunction imag_part(const GridFunction& f);

// Pointwise arithmetic; operands must share a grid.
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(complex s, const GridFunction& f);
GridFunction operator*(const RealGridFunction& a, const GridFunction& b);
GridFunction operator*(const GridFunction& a, const GridFunction& b);

/// max_i |f_i|
real max_abs(const GridFunction& f);

}  // namespace pdm
