#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pdm/ladder.hpp"
#include "pdm/states.hpp"

namespace pdm {

using ComplexMatrix = std::vector<std::vector<complex>>;

// ---------------------------------------------------------------------------
// Gram matrices

struct GramMatrices {
    /// G[m][n] = ∫ ψ_m ψ_n dx, which equals the conjugated pairing of φ_m = ψ_m* with ψ_n.
    ComplexMatrix bilinear;
    /// G[m][n] = ∫ ψ_m* ψ_n dx.
    ComplexMatrix sesquilinear;
};

/// Throws std::invalid_argument for fewer than two states.
GramMatrices gram_matrices(const StateSet& states);

/// max over m != n of |G[m][n]| / sqrt(|G[m][m]| |G[n][n]|).
real max_normalized_offdiagonal(const ComplexMatrix& g);

// ---------------------------------------------------------------------------
// Spectrum

struct EigenResidual {
    int n;
    real energy;
    /// ‖Hψ_n − E_n ψ_n‖ / ‖ψ_n‖
    real residual;
    /// ‖H†φ_n − E_n φ_n‖ / ‖φ_n‖
    real adjoint_residual;
};

std::vector<EigenResidual> eigen_residuals(const StateSet& states, const LadderSystem& system);

/// ‖Hψ − Eψ‖/‖ψ‖ for a single grid function.
real eigen_residual(const GridFunction& psi, real energy, const LadderSystem& system, bool adjoint = false);

struct RayleighQuotient {
    int n;
    /// ∫ψ_n Hψ_n / ∫ψ_n ψ_n
    complex value;
    real expected;
};

std::vector<RayleighQuotient> bilinear_rayleigh_quotients(const StateSet& states, const LadderSystem& system);

// ---------------------------------------------------------------------------
// Operator algebra

/// Seed used for the smooth test functions unless a caller overrides it.
inline constexpr std::uint64_t default_test_seed = 20240917;

/// Sums of three Gaussians with random centers, widths and complex amplitudes,
/// normalized to unit grid 2-norm. Centers fall in the middle half of the
/// ground state's support and widths are small enough that every function is
/// negligible at the boundary nodes. Deterministic for a given seed.
std::vector<GridFunction> smooth_test_functions(const LadderSystem& system, std::size_t count, std::uint64_t seed);

enum class Commutator {
    h_a_minus,       ///< [H, A⁻] + ΔE A⁻
    h_a_plus,        ///< [H, A⁺] − ΔE A⁺
    a_minus_a_plus,  ///< [A⁻, A⁺] − a²ΔE/ħ²
    hdag_b_minus,    ///< [H†, B⁻] + ΔE B⁻
    hdag_b_plus,     ///< [H†, B⁺] − ΔE B⁺
};

const char* commutator_name(Commutator c) noexcept;

/// ‖(commutator − expected) f‖ / ‖f‖.
real commutator_defect(Commutator which, const GridFunction& f, const LadderSystem& system);

/// |⟨B g, f⟩ − ⟨g, A f⟩| with (A, B) = (A⁺, B⁻) when `raising`, else (A⁻, B⁺).
real adjointness_defect(bool raising, const GridFunction& f, const GridFunction& g, const LadderSystem& system);

/// ‖A⁻ψ₀‖ / ‖ψ₀‖.
real annihilation_defect(const LadderSystem& system);

/// ‖A⁺ψ_n − (c_n/c_{n+1}) ψ_{n+1}‖ / ‖A⁺ψ_n‖ for n = 0..n_max−1.
std::vector<real> raising_action_defects(const StateSet& states, const LadderSystem& system);

// ---------------------------------------------------------------------------
// Convergence

struct ConvergenceStudy {
    std::vector<std::size_t> sizes;
    std::vector<real> spacings;
    std::vector<real> errors;
    /// Least-squares slope of log(error) against log(h); empty when the error
    /// sequence is not monotone or the quantity is exact.
    std::optional<real> slope;
    bool exact = false;
    std::string note;
};

/// Calls `error_for_size(n)` for each grid size and fits the slope. `span` is
/// the domain width, so h = span/(n−1). Throws std::invalid_argument for fewer
/// than three sizes or sizes whose spacings are not a geometric progression.
ConvergenceStudy convergence_order(const std::function<real(std::size_t)>& error_for_size,
                                   const std::vector<std::size_t>& sizes, real span);

/// Eigen-residual of the ground state of `system` rebuilt on n points.
real ground_residual_on_grid(const LadderSystem& system, std::size_t n);

// ---------------------------------------------------------------------------
// Oscillation counting

enum class Component { real, imaginary };

struct NodeCount {
    int count = 0;
    /// The component is identically zero.
    bool degenerate = false;
};

/// Counts sign changes of the component across the samples whose magnitude
/// exceeds amplitude_floor * max|component|; samples below the floor are skipped.
NodeCount node_count(const GridFunction& f, Component component, real amplitude_floor = 1e-6L);

// ---------------------------------------------------------------------------
// Constant-mass reference

/// Shifted-oscillator eigenfunctions for m ≡ 1, obtained by completing the
/// square: V = ½ω²(y)² + λ²/2 with y = x − x₀ + iλħ/ΔE and ω = ΔE/ħ, so
/// ψ_n ∝ H_n(sqrt(ω/ħ) y) exp(−ω y²/(2ħ)). Built with the normalized Hermite
/// recurrence and normalized with ∫|ψ_n|² = 1.
StateSet hermite_oracle(int n_max, const ModelParams& params, const Grid& grid);

}  // namespace pdm
