// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned below.
// Usage: acceptance <path-to-pdm-ladder>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <sys/wait.h>

#include "pdm/cli/catalog.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/report.hpp"
#include "pdm/validation.hpp"

using namespace pdm;

namespace {

constexpr real closed_form_tol = 1e-9L;
constexpr real c0_printed = 0.751126L;
constexpr real c0_tol = 1e-4L;
constexpr real annihilation_tol = 1e-8L;
constexpr real residual_tol = 1e-6L;
constexpr real commutator_tol = 1e-6L;
constexpr real heisenberg_tol = 1e-8L;
constexpr real factorization_tol = 1e-6L;
constexpr real negative_control_floor = 1e-2L;
constexpr real gram_tol = 1e-6L;
constexpr real sesquilinear_min = 0.1L;
constexpr real oracle_tol = 1e-8L;
constexpr real slope_tol_2 = 0.3L;
constexpr real slope_tol_4 = 0.5L;
constexpr real rayleigh_real_tol = 1e-6L;
constexpr real rayleigh_imag_tol = 1e-8L;
constexpr int test_functions = 20;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o{false, ""};
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs < budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s | %s | %.2fs (budget %.0fs)%s\n", pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), secs, budget_s, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
}

std::string sci(real v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2Le", v);
    return buf;
}

LadderSystem catalog_system(const cli::CatalogEntry& e, real lambda, Stencil st = Stencil::fourth) {
    ModelParams p;
    p.lambda = lambda;
    p.anchor = e.anchor;
    return LadderSystem(make_profile(e.expr, e.domain), p, Grid(e.domain.lo, e.domain.hi, e.grid), st);
}

LadderSystem quadratic(real lambda, std::size_t n = 4001, Stencil st = Stencil::fourth) {
    ModelParams p;
    p.lambda = lambda;
    return LadderSystem(make_profile("1 + x^2", {-4, 4}), p, Grid(-4, 4, n), st);
}

// F(x) = ½(x√(1+x²) + asinh x), the closed-form antiderivative for m = 1 + x².
real closed_F(real x) { return (x * std::sqrt(1 + x * x) + std::asinh(x)) / 2; }

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "pdm-ladder";
    const auto suite_start = Clock::now();

    criterion(1, "closed forms for m = 1 + x^2, lambda = 1/5", 1, [] {
        const LadderSystem s = quadratic(0.2L);
        real worst = 0;
        for (std::size_t i = 0; i < s.grid().size(); ++i) {
            const real x = s.grid().x(i);
            const real q = x * x + 1;
            const real sh = std::sqrt(q) * x + std::asinh(x);
            const real alpha = 1 / std::sqrt(q);
            const real beta = ((q + 1) * x * x * x / std::pow(q, 1.5L) + std::asinh(x)) / 2;
            const real vr = sh * sh / 8 + (2 / (q * q) - 7 * x * x / (q * q * q)) / 8;
            const real vi = sh / 10;
            worst = std::max({worst, std::abs(s.alpha()[i] - alpha), std::abs(s.beta_r()[i] - beta),
                              std::abs(s.v_real()[i] - vr), std::abs(s.v_imag()[i] - vi)});
        }
        return Outcome{worst < closed_form_tol, "max abs error " + sci(worst) + " < " + sci(closed_form_tol)};
    });

    criterion(2, "ground-state constant c0", 1, [] {
        // Independent value: 1/sqrt(∫ sqrt(1+x²) e^{-F²} dx) with the closed-form F and
        // 16-point Gauss-Legendre panels of width 0.01 on [-8, 8].
        const GaussLegendre gl(16);
        real integral = 0;
        for (int k = 0; k < 1600; ++k) {
            const real a = -8 + 0.01L * k, half = 0.005L;
            for (std::size_t j = 0; j < gl.nodes.size(); ++j) {
                const real x = a + half * (1 + gl.nodes[j]);
                const real F = closed_F(x);
                integral += half * gl.weights[j] * std::sqrt(1 + x * x) * std::exp(-F * F);
            }
        }
        const real independent = 1 / std::sqrt(integral);
        const real pipeline = ground_state(quadratic(0.2L)).c0;
        char buf[160];
        std::snprintf(buf, sizeof buf, "pipeline %.9Lf, independent %.9Lf, printed %.6Lf", pipeline, independent,
                      c0_printed);
        return Outcome{std::abs(pipeline - c0_printed) < c0_tol && std::abs(pipeline - independent) < 1e-8L, buf};
    });

    criterion(3, "annihilation and eigen-residuals, all catalog profiles", 10, [] {
        bool ok = true;
        real worst_ann = 0, worst_res = 0, worst_asym = 0;
        for (const cli::CatalogEntry& e : cli::catalog()) {
            const LadderSystem s = catalog_system(e, 0.2L);
            worst_ann = std::max(worst_ann, annihilation_defect(s));
            for (const EigenResidual& r : eigen_residuals(build_states(s, 4), s)) {
                worst_res = std::max({worst_res, r.residual, r.adjoint_residual});
                worst_asym = std::max(worst_asym, std::abs(r.residual - r.adjoint_residual) / r.residual);
            }
        }
        ok = worst_ann < annihilation_tol && worst_res < residual_tol && worst_asym < 1e-12L;
        return Outcome{ok, "annihilation " + sci(worst_ann) + ", residual " + sci(worst_res) +
                               ", H vs H-dagger relative gap " + sci(worst_asym)};
    });

    criterion(4, "commutators, Heisenberg relation, factorization, a = 2 hbar control", 10, [] {
        real comm = 0, heis = 0, fact = 0;
        for (const cli::CatalogEntry& e : cli::catalog()) {
            const LadderSystem s = catalog_system(e, 0.2L);
            for (const GridFunction& f : smooth_test_functions(s, test_functions, default_test_seed)) {
                for (Commutator c : {Commutator::h_a_minus, Commutator::h_a_plus, Commutator::hdag_b_minus,
                                     Commutator::hdag_b_plus}) {
                    comm = std::max(comm, commutator_defect(c, f, s));
                }
                heis = std::max(heis, commutator_defect(Commutator::a_minus_a_plus, f, s));
                fact = std::max({fact, factorization_defect(f, s, false), factorization_defect(f, s, true)});
            }
        }
        real control = INFINITY;
        ModelParams p;
        p.a = 2;
        p.expert_a_override = true;
        for (std::size_t n : {1001u, 2001u, 4001u, 8001u}) {
            const LadderSystem bad(make_profile("1 + x^2", {-4, 4}), p, Grid(-4, 4, n));
            for (const GridFunction& f : smooth_test_functions(bad, test_functions, default_test_seed)) {
                control = std::min(control, factorization_defect(f, bad));
            }
        }
        const bool ok = comm < commutator_tol && heis < heisenberg_tol && fact < factorization_tol &&
                        control >= negative_control_floor;
        return Outcome{ok, "[H,A] " + sci(comm) + ", [A-,A+] " + sci(heis) + ", factorization " + sci(fact) +
                               ", control min " + sci(control)};
    });

    criterion(5, "biorthogonality under the bilinear pairing", 5, [] {
        real worst = 0;
        for (const cli::CatalogEntry& e : cli::catalog()) {
            worst = std::max(worst, max_normalized_offdiagonal(gram_matrices(build_states(catalog_system(e, 0.2L), 4)).bilinear));
        }
        ModelParams p;
        p.lambda = 1;
        const LadderSystem unit(make_profile("1", {-8, 8}), p, Grid(-8, 8, 2001));
        const GramMatrices g = gram_matrices(build_states(unit, 1));
        const real ses = std::abs(g.sesquilinear[0][1]);
        return Outcome{worst < gram_tol && ses > sesquilinear_min,
                       "bilinear off-diagonal " + sci(worst) + ", |G_ses[0][1]| at m = 1, lambda = 1: " + sci(ses)};
    });

    criterion(6, "constant-mass oracle equivalence", 5, [] {
        real worst = 0;
        // ψ₅ at lambda = 1 meets the boundary-decay threshold on [-10, 10]
        const Grid g(-10, 10, 2001);
        for (real lambda : {0.0L, 1.0L}) {
            ModelParams p;
            p.lambda = lambda;
            const StateSet built = build_states(LadderSystem(make_profile("1", {-10, 10}), p, g), 5);
            const StateSet oracle = hermite_oracle(5, p, g);
            for (std::size_t n = 0; n <= 5; ++n) {
                for (std::size_t i = 0; i < g.size(); ++i) {
                    worst = std::max(worst, std::abs(built.psi(n)[i] - oracle.psi(n)[i]));
                }
            }
        }
        return Outcome{worst < oracle_tol, "max-norm distance " + sci(worst)};
    });

    criterion(7, "convergence orders on grids 501..4001", 30, [] {
        const std::vector<std::size_t> grids{501, 1001, 2001, 4001};
        const LadderSystem s2 = quadratic(0.2L, 4001, Stencil::second);
        const LadderSystem s4 = quadratic(0.2L, 4001, Stencil::fourth);
        const ConvergenceStudy a =
            convergence_order([&](std::size_t n) { return ground_residual_on_grid(s2, n); }, grids, 8);
        const ConvergenceStudy b =
            convergence_order([&](std::size_t n) { return ground_residual_on_grid(s4, n); }, grids, 8);
        const bool ok = a.slope && b.slope && std::abs(*a.slope - 2) <= slope_tol_2 && std::abs(*b.slope - 4) <= slope_tol_4;
        char buf[96];
        std::snprintf(buf, sizeof buf, "stencil 2 slope %.3Lf, stencil 4 slope %.3Lf", a.slope.value_or(NAN),
                      b.slope.value_or(NAN));
        return Outcome{ok, buf};
    });

    criterion(8, "node count of Re psi_0 rises with lambda", 10, [] {
        bool ok = true;
        std::string detail;
        for (const cli::CatalogEntry& e : cli::catalog()) {
            std::vector<int> counts;
            for (real lambda : {0.0L, 1.0L, 2.0L, 4.0L}) {
                counts.push_back(node_count(ground_state(catalog_system(e, lambda)).psi, Component::real).count);
            }
            for (std::size_t k = 1; k < counts.size(); ++k) ok = ok && counts[k] >= counts[k - 1];
            ok = ok && counts.back() > counts.front();
            detail += e.name + " {";
            for (std::size_t k = 0; k < counts.size(); ++k) detail += (k ? "," : "") + std::to_string(counts[k]);
            detail += "} ";
        }
        return Outcome{ok, detail};
    });

    criterion(9, "spectrum from bilinear Rayleigh quotients", 10, [] {
        real re = 0, im = 0;
        for (const cli::CatalogEntry& e : cli::catalog()) {
            for (real lambda : {0.2L, 1.0L}) {
                const LadderSystem s = catalog_system(e, lambda);
                for (const RayleighQuotient& q : bilinear_rayleigh_quotients(build_states(s, 4), s)) {
                    // (n + ½)ΔE + ½λ²ħ² with ΔE = ħ = 1
                    const real expected = (q.n + 0.5L) + lambda * lambda / 2;
                    re = std::max(re, std::abs(q.value.real() - expected));
                    im = std::max(im, std::abs(q.value.imag()));
                }
            }
        }
        return Outcome{re < rayleigh_real_tol && im < rayleigh_imag_tol,
                       "real error " + sci(re) + ", imaginary part " + sci(im)};
    });

    criterion(10, "pdm-ladder validate exits 0 on every catalog profile", 60, [&] {
        const std::filesystem::path out = std::filesystem::temp_directory_path() / "pdm_ladder_acceptance";
        bool ok = true;
        std::string detail;
        for (const cli::CatalogEntry& e : cli::catalog()) {
            const std::string cmd = "\"" + binary + "\" validate --profile " + e.name + " --out \"" +
                                    (out / e.name).string() + "\" > /dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            ok = ok && code == 0;
            detail += e.name + "=" + std::to_string(code) + " ";
        }
        return Outcome{ok, "exit codes " + detail};
    });

    const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    std::printf("acceptance: %d failing criteria, total %.1fs\n", failures, total);
    return failures == 0 && total < 60 ? 0 : 1;
}
