#include "pdm/states.hpp"

#include <cmath>
#include <stdexcept>

#include "pdm/quadrature.hpp"

namespace pdm {

namespace {

// Ground state without c₀.
GridFunction ground_kernel(const LadderSystem& s) {
    const ModelParams& p = s.params();
    GridFunction out(s.grid());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const real F = s.F()[i];
        const real amplitude = std::pow(s.mass()[i], 0.25L) * std::exp(-p.delta_e * F * F / (2 * p.hbar * p.hbar));
        const real phase = -p.lambda * F / p.a;
        out[i] = std::polar(amplitude, phase);
    }
    return out;
}

void require_decay(const GridFunction& f, const Grid& g, real reference, const std::string& what) {
    const real left = std::abs(f[0]) / reference;
    const real right = std::abs(f[f.size() - 1]) / reference;
    if (left < boundary_decay_threshold && right < boundary_decay_threshold) return;
    const real w = g.x_max() - g.x_min();
    const real lo = left >= boundary_decay_threshold ? g.x_min() - w / 2 : g.x_min();
    const real hi = right >= boundary_decay_threshold ? g.x_max() + w / 2 : g.x_max();
    throw DecayError(what + " does not decay at the domain boundary", std::max(left, right), lo, hi);
}

}  // namespace

GroundState ground_state(const LadderSystem& system) {
    GridFunction kernel = ground_kernel(system);
    const real boundary = std::max(std::abs(kernel[0]), std::abs(kernel[kernel.size() - 1]));
    require_decay(kernel, system.grid(), 1, "ground state");
    const real norm2 = sesquilinear_pair(kernel, kernel).real();
    if (!(norm2 > 0) || !std::isfinite(norm2)) {
        throw DecayError("ground state is not normalizable on this grid", boundary, system.grid().x_min(),
                         system.grid().x_max());
    }
    const real c0 = 1 / std::sqrt(norm2);
    return {c0 * kernel, c0, boundary};
}

StateSet::StateSet(std::vector<GridFunction> states, std::vector<complex> norm_constants, std::vector<real> energies,
                   std::vector<std::string> warnings)
    : states_(std::move(states)),
      norm_constants_(std::move(norm_constants)),
      energies_(std::move(energies)),
      warnings_(std::move(warnings)) {
    if (states_.empty() || norm_constants_.size() != states_.size() || energies_.size() != states_.size()) {
        throw std::invalid_argument("StateSet requires matching, nonempty state/constant/energy lists");
    }
}

StateSet build_states(const LadderSystem& system, int n_max, StateConstruction construction) {
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    const ModelParams& p = system.params();
    ground_state(system);  // decay and normalizability checks

    // c_n multiplies (A⁺)ⁿ applied to the ground state without its c₀
    std::vector<GridFunction> raw;
    raw.reserve(static_cast<std::size_t>(n_max) + 1);
    raw.push_back(ground_kernel(system));

    if (construction == StateConstruction::polynomial) {
        // (A⁺)ⁿ ψ̃₀ = (ka/2)^{n/2} H_n(z) ψ̃₀,  z = sqrt(k/a) (F + iλ/k),  k = aΔE/ħ²
        const real k = p.a * p.delta_e / (p.hbar * p.hbar);
        const real z_scale = std::sqrt(k / p.a);
        const real level_scale = std::sqrt(k * p.a / 2);
        const std::size_t n = system.grid().size();
        std::vector<complex> h_prev(n, complex(1)), h_cur(n);
        for (std::size_t i = 0; i < n; ++i) h_cur[i] = 2 * z_scale * complex(system.F()[i], p.lambda / k);
        real scale = 1;
        for (int level = 1; level <= n_max; ++level) {
            scale *= level_scale;
            GridFunction psi(system.grid());
            for (std::size_t i = 0; i < n; ++i) psi[i] = scale * h_cur[i] * raw[0][i];
            raw.push_back(std::move(psi));
            // H_{level+1} = 2 z H_level − 2 level H_{level−1}
            for (std::size_t i = 0; i < n; ++i) {
                const complex z = z_scale * complex(system.F()[i], p.lambda / k);
                const complex next = real{2} * z * h_cur[i] - real{2} * static_cast<real>(level) * h_prev[i];
                h_prev[i] = h_cur[i];
                h_cur[i] = next;
            }
        }
    } else {
        for (int level = 1; level <= n_max; ++level) raw.push_back(apply_ladder(Ladder::a_plus, raw.back(), system));
    }

    std::vector<GridFunction> states;
    std::vector<complex> constants;
    std::vector<real> energies;
    std::vector<std::string> warnings;
    for (int level = 0; level <= n_max; ++level) {
        const GridFunction& f = raw[static_cast<std::size_t>(level)];
        const real norm2 = sesquilinear_pair(f, f).real();
        if (!(norm2 > 0) || !std::isfinite(norm2)) {
            throw DecayError("state " + std::to_string(level) + " is not normalizable on this grid", 0,
                             system.grid().x_min(), system.grid().x_max());
        }
        const real c = 1 / std::sqrt(norm2);
        GridFunction psi = complex(c) * f;
        require_decay(psi, system.grid(), max_abs(psi), "state " + std::to_string(level));
        states.push_back(std::move(psi));
        constants.emplace_back(c);
        energies.push_back(energy(level, p));
    }
    if (n_max > precise_level_limit) {
        warnings.push_back("levels above " + std::to_string(precise_level_limit) +
                           " lose precision; compare against a refined grid");
    }
    return StateSet(std::move(states), std::move(constants), std::move(energies), std::move(warnings));
}

}  // namespace pdm
