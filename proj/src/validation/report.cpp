#include "pdm/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>

namespace pdm {

const char* status_name(SectionStatus s) noexcept {
    switch (s) {
    case SectionStatus::pass: return "pass";
    case SectionStatus::fail: return "fail";
    case SectionStatus::skipped: return "skipped";
    case SectionStatus::error: return "error";
    }
    return "?";
}

bool ValidationReport::passed() const noexcept {
    for (const auto& [name, s] : sections()) {
        if (s->status == SectionStatus::fail || s->status == SectionStatus::error) return false;
    }
    return true;
}

std::vector<std::pair<std::string, const Section*>> ValidationReport::sections() const {
    return {{"annihilation", &annihilation}, {"residuals", &residuals},
            {"gram", &gram},                 {"spectrum", &spectrum},
            {"commutators", &commutators},   {"factorization", &factorization},
            {"adjointness", &adjointness},   {"ladder_action", &ladder_action},
            {"convergence", &convergence},   {"nodes", &nodes}};
}

namespace {

constexpr const char* refine_hint = "refine grid: increase the number of grid points";

SectionStatus verdict(bool ok) { return ok ? SectionStatus::pass : SectionStatus::fail; }

std::string fmt(real v) {
    std::ostringstream os;
    os.precision(3);
    os << static_cast<double>(v);
    return os.str();
}

// Runs `body`, turning any exception into an error status on `section`.
void guarded(Section& section, const std::function<void()>& body) {
    try {
        body();
    } catch (const DecayError& e) {
        section.status = SectionStatus::error;
        section.note = e.what();
        section.hints.push_back("enlarge the domain to [" + fmt(e.suggested_lo()) + ", " + fmt(e.suggested_hi()) + "]");
    } catch (const std::exception& e) {
        section.status = SectionStatus::error;
        section.note = e.what();
    }
}

void skip(Section& section, const std::string& why) {
    section.status = SectionStatus::skipped;
    section.note = why;
}

}  // namespace

ValidationReport full_report(const LadderSystem& system, const ReportOptions& options) {
    ValidationReport r;
    r.options = options;
    r.thresholds = options.thresholds;
    const Thresholds& t = r.thresholds;
    const ModelParams& p = system.params();
    const std::vector<GridFunction> probes = smooth_test_functions(system, options.test_functions, options.seed);

    auto factorization_task = [&] {
        guarded(r.factorization, [&] {
            real h = 0, hdag = 0;
            for (const GridFunction& f : probes) {
                h = std::max(h, factorization_defect(f, system, false));
                hdag = std::max(hdag, factorization_defect(f, system, true));
            }
            r.factorization_h = h;
            r.factorization_hdag = hdag;
            r.factorization.status = verdict(h < t.factorization && hdag < t.factorization);
            if (p.a != p.hbar) r.factorization.note = "ladder scale a differs from hbar";
        });
    };

    if (p.a != p.hbar) {
        factorization_task();
        const std::string why = "skipped: ladder scale a differs from hbar";
        for (Section* s : {&r.annihilation, &r.residuals, &r.gram, &r.spectrum, &r.commutators, &r.adjointness,
                           &r.ladder_action, &r.convergence, &r.nodes}) {
            skip(*s, why);
        }
        return r;
    }

    std::optional<StateSet> states;
    std::string state_error;
    std::optional<DecayError> decay;
    try {
        states.emplace(build_states(system, options.n_max));
        r.warnings = states->warnings();
    } catch (const DecayError& e) {
        decay.emplace(e);
        state_error = e.what();
    } catch (const std::exception& e) {
        state_error = e.what();
    }
    // Sections needing eigenstates rethrow the construction failure so it is recorded per section.
    auto need_states = [&]() -> const StateSet& {
        if (states) return *states;
        if (decay) throw *decay;
        throw Error(state_error);
    };

    std::vector<std::function<void()>> tasks;

    tasks.emplace_back([&] {
        guarded(r.annihilation, [&] {
            r.annihilation_defect = annihilation_defect(system);
            r.annihilation.status = verdict(*r.annihilation_defect < t.annihilation);
            if (r.annihilation.status == SectionStatus::fail) r.annihilation.hints.push_back(refine_hint);
        });
    });

    tasks.emplace_back([&] {
        guarded(r.residuals, [&] {
            r.eigen = eigen_residuals(need_states(), system);
            bool ok = true;
            for (const EigenResidual& e : r.eigen) ok = ok && e.residual < t.residual && e.adjoint_residual < t.residual;
            r.residuals.status = verdict(ok);
            if (!ok) r.residuals.hints.push_back(refine_hint);
        });
    });

    tasks.emplace_back([&] {
        guarded(r.gram, [&] {
            const StateSet& s = need_states();
            if (s.size() < 2) {
                skip(r.gram, "insufficient states");
                return;
            }
            r.grams = gram_matrices(s);
            r.bilinear_offdiagonal = max_normalized_offdiagonal(r.grams->bilinear);
            r.sesquilinear_offdiagonal = max_normalized_offdiagonal(r.grams->sesquilinear);
            r.gram.status = verdict(*r.bilinear_offdiagonal < t.gram_offdiagonal);
            r.gram.note = "verdict uses the bilinear pairing; sesquilinear orthogonality holds at lambda = 0 only";
            if (r.gram.status == SectionStatus::fail) r.gram.hints.push_back(refine_hint);
        });
    });

    tasks.emplace_back([&] {
        guarded(r.spectrum, [&] {
            r.rayleigh = bilinear_rayleigh_quotients(need_states(), system);
            bool ok = true;
            for (const RayleighQuotient& q : r.rayleigh) {
                ok = ok && std::abs(q.value.real() - q.expected) < t.rayleigh_real &&
                     std::abs(q.value.imag()) < t.rayleigh_imag;
            }
            r.spectrum.status = verdict(ok);
            if (!ok) r.spectrum.hints.push_back(refine_hint);
        });
    });

    tasks.emplace_back([&] {
        guarded(r.commutators, [&] {
            bool ok = true;
            for (Commutator c : {Commutator::h_a_minus, Commutator::h_a_plus, Commutator::a_minus_a_plus,
                                 Commutator::hdag_b_minus, Commutator::hdag_b_plus}) {
                real worst = 0;
                for (const GridFunction& f : probes) worst = std::max(worst, commutator_defect(c, f, system));
                const real limit = c == Commutator::a_minus_a_plus ? t.heisenberg : t.commutator;
                r.commutator_results.push_back({c, worst, limit});
                ok = ok && worst < limit;
            }
            r.commutators.status = verdict(ok);
            if (!ok) r.commutators.hints.push_back(refine_hint);
        });
    });

    tasks.emplace_back(factorization_task);

    tasks.emplace_back([&] {
        guarded(r.adjointness, [&] {
            real up = 0, down = 0;
            for (std::size_t k = 0; k + 1 < probes.size(); ++k) {
                up = std::max(up, adjointness_defect(true, probes[k], probes[k + 1], system));
                down = std::max(down, adjointness_defect(false, probes[k], probes[k + 1], system));
            }
            r.adjointness_raising = up;
            r.adjointness_lowering = down;
            r.adjointness.status = verdict(up < t.adjointness && down < t.adjointness);
        });
    });

    tasks.emplace_back([&] {
        guarded(r.ladder_action, [&] {
            const StateSet& s = need_states();
            if (s.size() < 2) {
                skip(r.ladder_action, "insufficient states");
                return;
            }
            r.raising_defects = raising_action_defects(s, system);
            bool ok = true;
            for (real d : r.raising_defects) ok = ok && d < t.ladder_action;
            r.ladder_action.status = verdict(ok);
        });
    });

    tasks.emplace_back([&] {
        guarded(r.convergence, [&] {
            if (options.convergence_grids.empty()) {
                skip(r.convergence, "no grid sizes requested");
                return;
            }
            const real span = system.grid().x_max() - system.grid().x_min();
            bool ok = true;
            for (Stencil st : {Stencil::second, Stencil::fourth}) {
                const LadderSystem base = system.with_stencil(st);
                ConvergenceResult c{accuracy_order(st),
                                    convergence_order([&](std::size_t n) { return ground_residual_on_grid(base, n); },
                                                      options.convergence_grids, span),
                                    static_cast<real>(accuracy_order(st)),
                                    st == Stencil::second ? t.slope_tolerance_second : t.slope_tolerance_fourth};
                ok = ok && c.study.slope && std::abs(*c.study.slope - c.expected_slope) <= c.tolerance;
                r.convergence_results.push_back(std::move(c));
            }
            r.convergence.status = verdict(ok);
            if (!ok) r.convergence.hints.push_back("choose grids above the pre-asymptotic range and below the roundoff floor");
        });
    });

    tasks.emplace_back([&] {
        guarded(r.nodes, [&] {
            std::vector<real> lambdas = options.node_lambdas;
            std::sort(lambdas.begin(), lambdas.end());
            if (lambdas.empty()) {
                skip(r.nodes, "no lambda values requested");
                return;
            }
            for (real lambda : lambdas) {
                ModelParams q = p;
                q.lambda = lambda;
                const LadderSystem s(system.profile(), q, system.grid(), system.stencil());
                const GridFunction psi = ground_state(s).psi;
                r.node_samples.push_back({lambda, node_count(psi, Component::real, t.node_floor),
                                          node_count(psi, Component::imaginary, t.node_floor), s.ground_energy()});
            }
            bool ok = true;
            for (std::size_t k = 0; k + 1 < r.node_samples.size(); ++k) {
                ok = ok && r.node_samples[k].re.count <= r.node_samples[k + 1].re.count;
            }
            if (r.node_samples.size() > 1) {
                ok = ok && r.node_samples.front().re.count < r.node_samples.back().re.count;
            }
            r.nodes.status = verdict(ok);
            r.nodes.note = "node counts of Re psi_0 must be nondecreasing in lambda and rise across the sweep";
        });
    });

    std::vector<std::future<void>> running;
    running.reserve(tasks.size());
    for (auto& task : tasks) running.push_back(std::async(std::launch::async, task));
    for (auto& f : running) f.get();
    return r;
}

}  // namespace pdm
