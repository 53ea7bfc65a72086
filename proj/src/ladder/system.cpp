#include <cmath>

#include "pdm/errors.hpp"
#include "pdm/ladder.hpp"
#include "pdm/quadrature.hpp"

namespace pdm {

real alpha_at(const MassProfile& profile, const ModelParams& params, real x) {
    return params.a / std::sqrt(profile.mass(x));
}

real alpha_prime_at(const MassProfile& profile, const ModelParams& params, real x) {
    const real m = profile.mass(x);
    return -params.a * profile.mass_prime(x) / (2 * m * std::sqrt(m));
}

real beta_r_at(const MassProfile& profile, const ModelParams& params, real x, real F) {
    const real m = profile.mass(x);
    const real inv_sqrt_m_prime = -profile.mass_prime(x) / (2 * m * std::sqrt(m));
    return params.a / 2 * inv_sqrt_m_prime + params.a * params.delta_e / (params.hbar * params.hbar) * F;
}

real potential_real_at(const MassProfile& profile, const ModelParams& params, real x, real F) {
    const real m = profile.mass(x), m1 = profile.mass_prime(x), m2 = profile.mass_second(x);
    const real ratio = params.delta_e / params.hbar;
    return ratio * ratio * F * F / 2 -
           params.hbar * params.hbar / 8 * (7 * m1 * m1 / (4 * m * m * m) - m2 / (m * m));
}

real potential_imag_at(const ModelParams& params, real F) { return params.delta_e / params.a * params.lambda * F; }

RealGridFunction alpha_on(const MassProfile& profile, const ModelParams& params, const Grid& grid) {
    return sample_real([&](real x) { return alpha_at(profile, params, x); }, grid);
}

RealGridFunction alpha_prime_on(const MassProfile& profile, const ModelParams& params, const Grid& grid) {
    return sample_real([&](real x) { return alpha_prime_at(profile, params, x); }, grid);
}

RealGridFunction beta_r_on(const MassProfile& profile, const ModelParams& params, const RealGridFunction& F) {
    RealGridFunction out(F.grid());
    for (std::size_t i = 0; i < F.size(); ++i) out[i] = beta_r_at(profile, params, F.grid().x(i), F[i]);
    return out;
}

ComplexPotential potential_on(const MassProfile& profile, const ModelParams& params, const RealGridFunction& F) {
    ComplexPotential v{RealGridFunction(F.grid()), RealGridFunction(F.grid())};
    for (std::size_t i = 0; i < F.size(); ++i) {
        v.real_part[i] = potential_real_at(profile, params, F.grid().x(i), F[i]);
        v.imag_part[i] = potential_imag_at(params, F[i]);
    }
    return v;
}

RealGridFunction veff_von_roos(const MassProfile& profile, const RealGridFunction& V, const OrderingParams& ordering,
                               const ModelParams& params) {
    ordering.validate();
    const real al = ordering.alpha, be = ordering.beta;
    const real c2 = 1 + be;
    const real c1 = al * al + al * be + al + be + 1;
    const real hb2 = params.hbar * params.hbar;
    RealGridFunction out(V.grid());
    for (std::size_t i = 0; i < V.size(); ++i) {
        const real x = V.grid().x(i);
        const real m = profile.mass(x), m1 = profile.mass_prime(x), m2 = profile.mass_second(x);
        out[i] = V[i] + hb2 * (c2 * m2 / (4 * m * m) - m1 * m1 * c1 / (2 * m * m * m));
    }
    return out;
}

LadderSystem::LadderSystem(MassProfile profile, ModelParams params, Grid grid, Stencil stencil)
    : profile_(std::move(profile)),
      params_(params),
      grid_(grid),
      stencil_(stencil),
      m_(grid),
      m1_(grid),
      m2_(grid),
      alpha_(grid),
      alpha_prime_(grid),
      beta_r_(grid),
      F_(grid),
      v_real_(grid),
      v_imag_(grid),
      e0_(0) {
    params_.validate();
    const Interval& d = profile_.domain();
    const real slack = 1e-12L * d.width();
    if (grid_.x_min() < d.lo - slack || grid_.x_max() > d.hi + slack) {
        throw GridError("grid extends beyond the profile's validated domain");
    }
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        const real x = grid_.x(i);
        m_[i] = profile_.mass(x);
        m1_[i] = profile_.mass_prime(x);
        m2_[i] = profile_.mass_second(x);
    }
    F_ = cumulative_antiderivative_sqrt_m(profile_, grid_, params_.anchor);
    alpha_ = alpha_on(profile_, params_, grid_);
    alpha_prime_ = alpha_prime_on(profile_, params_, grid_);
    beta_r_ = beta_r_on(profile_, params_, F_);
    auto v = potential_on(profile_, params_, F_);
    v_real_ = std::move(v.real_part);
    v_imag_ = std::move(v.imag_part);
    e0_ = energy(0, params_);
}

real LadderSystem::ladder_commutator() const noexcept {
    return params_.a * params_.a * params_.delta_e / (params_.hbar * params_.hbar);
}

LadderSystem LadderSystem::regrid(std::size_t n) const {
    return LadderSystem(profile_, params_, Grid(grid_.x_min(), grid_.x_max(), n), stencil_);
}

LadderSystem LadderSystem::with_stencil(Stencil stencil) const {
    return LadderSystem(profile_, params_, grid_, stencil);
}

namespace {

constexpr real inv_sqrt2 = 0.707106781186547524400844362104849039L;

GridFunction lower(const GridFunction& f, const LadderSystem& s, real lambda) {
    const GridFunction df = derivative(f, 1, s.stencil());
    GridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = (s.alpha()[i] * df[i] + complex(s.beta_r()[i], lambda) * f[i]) * inv_sqrt2;
    }
    return out;
}

GridFunction raise(const GridFunction& f, const LadderSystem& s, real lambda) {
    const GridFunction df = derivative(f, 1, s.stencil());
    GridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = (-s.alpha()[i] * df[i] + complex(s.beta_r()[i] - s.alpha_prime()[i], lambda) * f[i]) * inv_sqrt2;
    }
    return out;
}

}  // namespace

GridFunction apply_ladder(Ladder which, const GridFunction& f, const LadderSystem& system) {
    require_same_grid(f.grid(), system.grid());
    const real lambda = system.beta_i();
    switch (which) {
    case Ladder::a_minus:
        return lower(f, system, lambda);
    case Ladder::a_plus:
        return raise(f, system, lambda);
    case Ladder::b_minus:
        return lower(f, system, -lambda);
    case Ladder::b_plus:
        return raise(f, system, -lambda);
    }
    throw std::invalid_argument("unknown ladder operator");
}

GridFunction apply_hamiltonian(const GridFunction& f, const LadderSystem& system, bool adjoint) {
    require_same_grid(f.grid(), system.grid());
    const GridFunction d1 = derivative(f, 1, system.stencil());
    const GridFunction d2 = derivative(f, 2, system.stencil());
    const real hb2 = system.params().hbar * system.params().hbar;
    const real sign = adjoint ? -1 : 1;
    GridFunction out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const real m = system.mass()[i];
        const complex v(system.v_real()[i], sign * system.v_imag()[i]);
        out[i] = -hb2 / (2 * m) * d2[i] + hb2 * system.mass_prime()[i] / (2 * m * m) * d1[i] + v * f[i];
    }
    return out;
}

real factorization_defect(const GridFunction& f, const LadderSystem& system, bool adjoint) {
    const Ladder down = adjoint ? Ladder::b_minus : Ladder::a_minus;
    const Ladder up = adjoint ? Ladder::b_plus : Ladder::a_plus;
    const GridFunction product = apply_ladder(up, apply_ladder(down, f, system), system);
    const GridFunction hf = apply_hamiltonian(f, system, adjoint);
    GridFunction diff(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = product[i] + system.ground_energy() * f[i] - hf[i];
    return l2_norm(diff) / l2_norm(f);
}

}  // namespace pdm
