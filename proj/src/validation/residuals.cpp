#include "pdm/quadrature.hpp"
#include "pdm/validation.hpp"

namespace pdm {

real eigen_residual(const GridFunction& psi, real energy, const LadderSystem& system, bool adjoint) {
    const GridFunction h_psi = apply_hamiltonian(psi, system, adjoint);
    GridFunction r(psi.grid());
    for (std::size_t i = 0; i < psi.size(); ++i) r[i] = h_psi[i] - energy * psi[i];
    return l2_norm(r) / l2_norm(psi);
}

std::vector<EigenResidual> eigen_residuals(const StateSet& states, const LadderSystem& system) {
    std::vector<EigenResidual> out;
    for (std::size_t n = 0; n < states.size(); ++n) {
        const real e = states.energies()[n];
        out.push_back({static_cast<int>(n), e, eigen_residual(states.psi(n), e, system, false),
                       eigen_residual(states.phi(n), e, system, true)});
    }
    return out;
}

std::vector<RayleighQuotient> bilinear_rayleigh_quotients(const StateSet& states, const LadderSystem& system) {
    std::vector<RayleighQuotient> out;
    for (std::size_t n = 0; n < states.size(); ++n) {
        const GridFunction& psi = states.psi(n);
        const complex q = bilinear_pair(psi, apply_hamiltonian(psi, system)) / bilinear_pair(psi, psi);
        out.push_back({static_cast<int>(n), q, states.energies()[n]});
    }
    return out;
}

real ground_residual_on_grid(const LadderSystem& system, std::size_t n) {
    const LadderSystem refined = system.regrid(n);
    return eigen_residual(ground_state(refined).psi, refined.ground_energy(), refined);
}

}  // namespace pdm
