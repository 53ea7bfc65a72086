#include <cmath>
#include <stdexcept>

#include "pdm/quadrature.hpp"
#include "pdm/validation.hpp"

namespace pdm {

StateSet hermite_oracle(int n_max, const ModelParams& params, const Grid& grid) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    const real omega = params.delta_e / params.hbar;
    const real scale = std::sqrt(omega / params.hbar);
    const complex shift(0, params.lambda * params.hbar / params.delta_e);

    std::vector<GridFunction> states(static_cast<std::size_t>(n_max) + 1, GridFunction(grid));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const complex z = scale * (grid.x(i) - params.anchor + shift);
        // normalized Hermite functions h_n(z) = H_n(z) e^{-z²/2} / sqrt(2ⁿ n! sqrt(π))
        complex prev = 0;
        complex cur = std::pow(pi, -0.25L) * std::exp(-z * z / real(2));
        states[0][i] = cur;
        for (int n = 0; n < n_max; ++n) {
            const real nn = static_cast<real>(n);
            const complex next = std::sqrt(2 / (nn + 1)) * z * cur - std::sqrt(nn / (nn + 1)) * prev;
            prev = cur;
            cur = next;
            states[static_cast<std::size_t>(n) + 1][i] = cur;
        }
    }

    std::vector<complex> norms;
    std::vector<real> energies;
    for (int n = 0; n <= n_max; ++n) {
        GridFunction& s = states[static_cast<std::size_t>(n)];
        const real c = 1 / std::sqrt(sesquilinear_pair(s, s).real());
        s = complex(c) * s;
        norms.emplace_back(c);
        energies.push_back(params.hbar * omega * (n + 0.5L) + params.lambda * params.lambda / 2);
    }
    return StateSet(std::move(states), std::move(norms), std::move(energies));
}

}  // namespace pdm
