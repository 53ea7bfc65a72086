#include "pdm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace pdm {

GaussLegendre::GaussLegendre(std::size_t points) : nodes(points), weights(points) {
    if (points == 0) throw std::invalid_argument("Gauss-Legendre rule needs at least one point");
    const std::size_t n = points;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n starting from the Chebyshev-like guess
        real z = std::cos(pi * (static_cast<real>(i) + 0.75L) / (static_cast<real>(n) + 0.5L));
        real dp = 1;
        for (int iter = 0; iter < 100; ++iter) {
            real p0 = 1, p1 = z;
            for (std::size_t k = 2; k <= n; ++k) {
                const real pk = ((2 * static_cast<real>(k) - 1) * z * p1 - (static_cast<real>(k) - 1) * p0) /
                                static_cast<real>(k);
                p0 = p1;
                p1 = pk;
            }
            if (n == 1) p0 = 1;
            dp = static_cast<real>(n) * (z * p1 - p0) / (z * z - 1);
            const real step = p1 / dp;
            z -= step;
            if (std::fabs(step) < 1e-19L) break;
        }
        if (n == 1) {
            z = 0;
            dp = 1;
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        const real w = 2 / ((1 - z * z) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n == 1) weights[0] = 2;
}

namespace {

template <typename T>
T simpson(const BasicGridFunction<T>& f) {
    const std::size_t n = f.size();
    const std::size_t intervals = n - 1;
    const real h = f.grid().h();
    T total{};
    std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) total += (f[i] + real{4} * f[i + 1] + f[i + 2]) * (h / 3);
    if (simpson_end != intervals) {
        const std::size_t i = simpson_end;
        total += (f[i] + real{3} * f[i + 1] + real{3} * f[i + 2] + f[i + 3]) * (3 * h / 8);
    }
    return total;
}

real sqrt_mass_integral(const MassProfile& profile, const GaussLegendre& rule, real a, real b) {
    const real half = (b - a) / 2, mid = (a + b) / 2;
    real acc = 0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * std::sqrt(profile.mass(mid + half * rule.nodes[k]));
    return acc * half;
}

const GaussLegendre& antiderivative_rule() {
    static const GaussLegendre rule(antiderivative_gauss_points);
    return rule;
}

}  // namespace

complex integrate(const GridFunction& f) { return simpson(f); }

real integrate(const RealGridFunction& f) { return simpson(f); }

complex bilinear_pair(const GridFunction& f, const GridFunction& g) { return integrate(f * g); }

complex sesquilinear_pair(const GridFunction& f, const GridFunction& g) { return integrate(conj(f) * g); }

real l2_norm(const GridFunction& f) {
    real acc = 0;
    for (const complex& v : f) acc += std::norm(v);
    return std::sqrt(acc * f.grid().h());
}

RealGridFunction cumulative_antiderivative_sqrt_m(const MassProfile& profile, const Grid& grid, real anchor) {
    if (!(grid.x_min() <= anchor && anchor <= grid.x_max())) {
        throw std::invalid_argument("antiderivative anchor lies outside the grid");
    }
    const GaussLegendre& rule = antiderivative_rule();
    const std::size_t n = grid.size();
    RealGridFunction F(grid);

    // cell k spans [x_k, x_{k+1}] and contains the anchor
    std::size_t k = static_cast<std::size_t>(std::floor((anchor - grid.x_min()) / grid.h()));
    if (k >= n - 1) k = n - 2;
    const real xl = grid.x(k), xr = grid.x(k + 1);
    F[k] = anchor == xl ? real{0} : -sqrt_mass_integral(profile, rule, xl, anchor);
    F[k + 1] = anchor == xr ? real{0} : sqrt_mass_integral(profile, rule, anchor, xr);

    for (std::size_t i = k + 1; i + 1 < n; ++i) F[i + 1] = F[i] + sqrt_mass_integral(profile, rule, grid.x(i), grid.x(i + 1));
    for (std::size_t i = k; i > 0; --i) F[i - 1] = F[i] - sqrt_mass_integral(profile, rule, grid.x(i - 1), grid.x(i));
    return F;
}

real antiderivative_sqrt_m(const MassProfile& profile, real anchor, real x, real max_panel) {
    if (x == anchor) return 0;
    const GaussLegendre& rule = antiderivative_rule();
    const real span = x - anchor;
    const auto panels = static_cast<std::size_t>(std::ceil(std::fabs(span) / max_panel));
    const real w = span / static_cast<real>(panels);
    real acc = 0;
    for (std::size_t p = 0; p < panels; ++p) {
        const real a = anchor + static_cast<real>(p) * w;
        acc += sqrt_mass_integral(profile, rule, a, a + w);
    }
    return acc;
}

}  // namespace pdm
