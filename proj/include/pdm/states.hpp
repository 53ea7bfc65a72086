#pragma once

#include <string>
#include <vector>

#include "pdm/ladder.hpp"

namespace pdm {

/// States must fall below this magnitude (relative to their peak) at both
/// boundary nodes; the truncated domain is otherwise too small.
inline constexpr real boundary_decay_threshold = 1e-12L;

/// Levels above this are built with a precision warning attached.
inline constexpr int precise_level_limit = 8;

struct GroundState {
    GridFunction psi;
    /// Real positive c₀ fixing ∫|ψ₀|² = 1.
    real c0;
    /// Largest |unnormalized ψ₀| at the two boundary nodes.
    real boundary_magnitude;
};

/// ψ₀ = c₀ m^{1/4} exp(−ΔE F²/(2ħ²)) exp(−iλF/a), the state annihilated by A⁻.
/// Throws DecayError when the unnormalized state exceeds the decay threshold
/// at either boundary node.
GroundState ground_state(const LadderSystem& system);

/// How (A⁺)ⁿ ψ₀ is evaluated.
enum class StateConstruction {
    /// Exact action of A⁺ on the polynomial prefactor: writing ψ = q(F) ψ₀,
    /// A⁺ψ = ((2(kF + iλ) q − a q')/√2) ψ₀ with k = aΔE/ħ². The prefactors are
    /// scaled Hermite polynomials evaluated pointwise.
    polynomial,
    /// Repeated finite-difference application of A⁺ on the grid. Roundoff grows
    /// by roughly 1/h per level, so this is only usable for a few levels.
    grid,
};

/// ψ_n = c_n (A⁺)ⁿ ψ̃₀ for n = 0..n_max, where ψ̃₀ is the ground state without c₀
/// and each c_n is real positive with ∫|ψ_n|² = 1. φ_n = conj(ψ_n) are the
/// eigenfunctions of H†.
class StateSet {
public:
    StateSet(std::vector<GridFunction> states, std::vector<complex> norm_constants, std::vector<real> energies,
             std::vector<std::string> warnings = {});

    std::size_t size() const noexcept { return states_.size(); }
    int n_max() const noexcept { return static_cast<int>(states_.size()) - 1; }
    const GridFunction& psi(std::size_t n) const { return states_.at(n); }
    GridFunction phi(std::size_t n) const { return conj(states_.at(n)); }
    const std::vector<GridFunction>& states() const noexcept { return states_; }
    const std::vector<complex>& norm_constants() const noexcept { return norm_constants_; }
    const std::vector<real>& energies() const noexcept { return energies_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    std::vector<GridFunction> states_;
    std::vector<complex> norm_constants_;
    std::vector<real> energies_;
    std::vector<std::string> warnings_;
};

/// Throws std::invalid_argument for n_max < 0 and DecayError when a state does
/// not decay at the boundaries (the message suggests an enlarged domain).
StateSet build_states(const LadderSystem& system, int n_max,
                      StateConstruction construction = StateConstruction::polynomial);

}  // namespace pdm
