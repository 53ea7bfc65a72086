#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "pdm/quadrature.hpp"
#include "pdm/validation.hpp"

namespace pdm {

namespace {

// Uniform on [0, 1) from the raw engine output; std::uniform_real_distribution
// is implementation-defined and would break cross-platform reproducibility.
real unit_uniform(std::mt19937_64& gen) { return static_cast<real>(gen() >> 11) * 0x1.0p-53L; }

real uniform(std::mt19937_64& gen, real lo, real hi) { return lo + (hi - lo) * unit_uniform(gen); }

GridFunction combine(const GridFunction& a, complex ca, const GridFunction& b, complex cb) {
    GridFunction out(a.grid());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
    return out;
}

}  // namespace

std::vector<GridFunction> smooth_test_functions(const LadderSystem& system, std::size_t count, std::uint64_t seed) {
    const Grid& g = system.grid();
    const ModelParams& p = system.params();

    // support of the ground-state envelope m^{1/4} exp(-ΔE F²/2ħ²)
    std::vector<real> envelope(g.size());
    real peak = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const real F = system.F()[i];
        envelope[i] = std::pow(system.mass()[i], 0.25L) * std::exp(-p.delta_e * F * F / (2 * p.hbar * p.hbar));
        peak = std::max(peak, envelope[i]);
    }
    std::size_t first = 0, last = g.size() - 1;
    while (first < last && envelope[first] < 1e-8L * peak) ++first;
    while (last > first && envelope[last] < 1e-8L * peak) --last;
    const real s_lo = g.x(first), s_hi = g.x(last);
    const real c_lo = s_lo + (s_hi - s_lo) / 4, c_hi = s_hi - (s_hi - s_lo) / 4;
    const real margin = std::min(c_lo - g.x_min(), g.x_max() - c_hi);
    const real w_hi = std::min((s_hi - s_lo) / 6, margin / 7);
    const real w_lo = w_hi / 2;

    std::mt19937_64 gen(seed);
    std::vector<GridFunction> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        real centers[3], widths[3];
        complex amps[3];
        for (int t = 0; t < 3; ++t) {
            centers[t] = uniform(gen, c_lo, c_hi);
            widths[t] = uniform(gen, w_lo, w_hi);
            const real re = uniform(gen, -1, 1);
            const real im = uniform(gen, -1, 1);
            amps[t] = complex(re, im);
        }
        GridFunction f(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            complex acc = 0;
            for (int t = 0; t < 3; ++t) {
                const real u = (g.x(i) - centers[t]) / widths[t];
                acc += amps[t] * std::exp(-u * u / 2);
            }
            f[i] = acc;
        }
        out.push_back(complex(1 / l2_norm(f)) * f);
    }
    return out;
}

const char* commutator_name(Commutator c) noexcept {
    switch (c) {
    case Commutator::h_a_minus: return "H_Aminus";
    case Commutator::h_a_plus: return "H_Aplus";
    case Commutator::a_minus_a_plus: return "Aminus_Aplus";
    case Commutator::hdag_b_minus: return "Hdag_Bminus";
    case Commutator::hdag_b_plus: return "Hdag_Bplus";
    }
    return "?";
}

real commutator_defect(Commutator which, const GridFunction& f, const LadderSystem& system) {
    const real de = system.params().delta_e;
    auto h_commutator = [&](Ladder op, bool adjoint, real sign) {
        const GridFunction af = apply_ladder(op, f, system);
        const GridFunction h_af = apply_hamiltonian(af, system, adjoint);
        const GridFunction a_hf = apply_ladder(op, apply_hamiltonian(f, system, adjoint), system);
        GridFunction r(f.grid());
        for (std::size_t i = 0; i < f.size(); ++i) r[i] = h_af[i] - a_hf[i] - sign * de * af[i];
        return l2_norm(r) / l2_norm(f);
    };
    switch (which) {
    case Commutator::h_a_minus:
        return h_commutator(Ladder::a_minus, false, -1);
    case Commutator::h_a_plus:
        return h_commutator(Ladder::a_plus, false, 1);
    case Commutator::hdag_b_minus:
        return h_commutator(Ladder::b_minus, true, -1);
    case Commutator::hdag_b_plus:
        return h_commutator(Ladder::b_plus, true, 1);
    case Commutator::a_minus_a_plus: {
        const GridFunction mp = apply_ladder(Ladder::a_minus, apply_ladder(Ladder::a_plus, f, system), system);
        const GridFunction pm = apply_ladder(Ladder::a_plus, apply_ladder(Ladder::a_minus, f, system), system);
        const GridFunction r = combine(combine(mp, 1, pm, -1), 1, f, -system.ladder_commutator());
        return l2_norm(r) / l2_norm(f);
    }
    }
    throw std::invalid_argument("unknown commutator");
}

real adjointness_defect(bool raising, const GridFunction& f, const GridFunction& g, const LadderSystem& system) {
    const Ladder a = raising ? Ladder::a_plus : Ladder::a_minus;
    const Ladder b = raising ? Ladder::b_minus : Ladder::b_plus;
    return std::abs(sesquilinear_pair(apply_ladder(b, g, system), f) - sesquilinear_pair(g, apply_ladder(a, f, system)));
}

real annihilation_defect(const LadderSystem& system) {
    const GridFunction psi = ground_state(system).psi;
    return l2_norm(apply_ladder(Ladder::a_minus, psi, system)) / l2_norm(psi);
}

std::vector<real> raising_action_defects(const StateSet& states, const LadderSystem& system) {
    std::vector<real> out;
    for (std::size_t n = 0; n + 1 < states.size(); ++n) {
        const GridFunction up = apply_ladder(Ladder::a_plus, states.psi(n), system);
        const complex ratio = states.norm_constants()[n] / states.norm_constants()[n + 1];
        out.push_back(l2_norm(combine(up, 1, states.psi(n + 1), -ratio)) / l2_norm(up));
    }
    return out;
}

}  // namespace pdm
