#pragma once

#include "pdm/finite_difference.hpp"
#include "pdm/grid.hpp"
#include "pdm/profile.hpp"
#include "pdm/types.hpp"

namespace pdm {

/// Physical constants and the free constants of the ladder construction.
struct ModelParams {
    real hbar = 1;
    /// Level spacing ΔE (> 0).
    real delta_e = 1;
    /// Imaginary part of the ladder coefficient β (β_I = λ).
    real lambda = 0;
    /// Ladder scale: α(x) = a / sqrt(m(x)). Must equal hbar unless the expert
    /// override is set; with a != hbar the factorization H = A⁺A⁻ + E₀ fails.
    real a = 1;
    /// Lower limit of F(x) = ∫ sqrt(m) dx, so F(anchor) = 0.
    real anchor = 0;
    bool expert_a_override = false;

    /// Throws ParameterError on invalid combinations.
    void validate() const;
};

/// von Roos ordering parameters; they must satisfy alpha + beta + gamma = -1.
struct OrderingParams {
    real alpha = 0;
    real beta = -1;
    real gamma = 0;

    void validate() const;
};

/// E_n = (n + 1/2) ΔE + λ²/2. Throws std::invalid_argument for n < 0.
real energy(int n, const ModelParams& params);

// Closed forms of the ladder coefficients.
real alpha_at(const MassProfile& profile, const ModelParams& params, real x);
real alpha_prime_at(const MassProfile& profile, const ModelParams& params, real x);
/// β_R(x) = (a/2) (m^{-1/2})' + (a ΔE / ħ²) F(x), with F(x) supplied by the caller.
real beta_r_at(const MassProfile& profile, const ModelParams& params, real x, real F);
real potential_real_at(const MassProfile& profile, const ModelParams& params, real x, real F);
real potential_imag_at(const ModelParams& params, real F);

RealGridFunction alpha_on(const MassProfile& profile, const ModelParams& params, const Grid& grid);
RealGridFunction alpha_prime_on(const MassProfile& profile, const ModelParams& params, const Grid& grid);
RealGridFunction beta_r_on(const MassProfile& profile, const ModelParams& params, const RealGridFunction& F);

struct ComplexPotential {
    RealGridFunction real_part;
    RealGridFunction imag_part;
};

/// V_R = ½(ΔE/ħ)² F² − (ħ²/8)(7m'²/(4m³) − m''/m²),  V_I = (ΔE/a) λ F.
ComplexPotential potential_on(const MassProfile& profile, const ModelParams& params, const RealGridFunction& F);

/// Effective potential absorbing the von Roos ordering into the BenDaniel–Duke form:
/// V + ħ²((1+β) m''/(4m²) − m'² (α²+αβ+α+β+1)/(2m³)).
RealGridFunction veff_von_roos(const MassProfile& profile, const RealGridFunction& V, const OrderingParams& ordering,
                               const ModelParams& params);

/// The assembled model on a grid: cached samples of m, m', m'', α, α', β_R, F,
/// V_R and V_I, plus the factorization energy. Immutable after construction.
class LadderSystem {
public:
    /// Throws ParameterError, PositivityError, or GridError when the grid leaves
    /// the profile's validated domain.
    LadderSystem(MassProfile profile, ModelParams params, Grid grid, Stencil stencil = Stencil::fourth);

    const MassProfile& profile() const noexcept { return profile_; }
    const ModelParams& params() const noexcept { return params_; }
    const Grid& grid() const noexcept { return grid_; }
    Stencil stencil() const noexcept { return stencil_; }

    const RealGridFunction& mass() const noexcept { return m_; }
    const RealGridFunction& mass_prime() const noexcept { return m1_; }
    const RealGridFunction& mass_second() const noexcept { return m2_; }
    const RealGridFunction& alpha() const noexcept { return alpha_; }
    const RealGridFunction& alpha_prime() const noexcept { return alpha_prime_; }
    const RealGridFunction& beta_r() const noexcept { return beta_r_; }
    real beta_i() const noexcept { return params_.lambda; }
    const RealGridFunction& F() const noexcept { return F_; }
    const RealGridFunction& v_real() const noexcept { return v_real_; }
    const RealGridFunction& v_imag() const noexcept { return v_imag_; }
    /// E₀ = ΔE/2 + λ²/2, the constant in H = A⁺A⁻ + E₀.
    real ground_energy() const noexcept { return e0_; }
    /// a² ΔE / ħ², the value of [A⁻, A⁺].
    real ladder_commutator() const noexcept;

    /// Same system on a different grid (used by convergence studies).
    LadderSystem regrid(std::size_t n) const;
    LadderSystem with_stencil(Stencil stencil) const;

private:
    MassProfile profile_;
    ModelParams params_;
    Grid grid_;
    Stencil stencil_;
    RealGridFunction m_, m1_, m2_;
    RealGridFunction alpha_, alpha_prime_, beta_r_, F_;
    RealGridFunction v_real_, v_imag_;
    real e0_;
};

/// A⁻ and A⁺ are the ladder operators of H; B⁻ = (A⁺)† and B⁺ = (A⁻)† those of H†.
enum class Ladder { a_minus, a_plus, b_minus, b_plus };

///   A⁻f = (α f' + (β_R + iλ) f)/√2
///   A⁺f = (−α f' − α' f + (β_R + iλ) f)/√2
///   B∓  = A∓ with λ → −λ
GridFunction apply_ladder(Ladder which, const GridFunction& f, const LadderSystem& system);

/// H f = −(ħ²/2m) f'' + (ħ² m'/2m²) f' + (V_R + iV_I) f. The adjoint flips the
/// sign of V_I only.
GridFunction apply_hamiltonian(const GridFunction& f, const LadderSystem& system, bool adjoint = false);

/// ‖(A⁺A⁻ + E₀ − H) f‖ / ‖f‖, or ‖(B⁺B⁻ + E₀ − H†) f‖ / ‖f‖ when `adjoint`.
real factorization_defect(const GridFunction& f, const LadderSystem& system, bool adjoint = false);

}  // namespace pdm
