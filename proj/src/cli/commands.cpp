#include "pdm/cli/commands.hpp"

#include <CLI11.hpp>

#include <future>
#include <optional>

#include "pdm/cli/output.hpp"
#include "pdm/cli/report_json.hpp"
#include "pdm/cli/svg.hpp"
#include "pdm/report.hpp"
#include "pdm/states.hpp"

namespace pdm::cli {

namespace {

std::string lambda_text(real lambda) { return "lambda = " + format_g12(lambda); }

std::vector<real> xs(const Grid& g) {
    std::vector<real> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = g.x(i);
    return out;
}

template <typename F>
std::vector<real> map_values(const GridFunction& f, F part) {
    std::vector<real> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = part(f[i]);
    return out;
}

std::vector<real> to_vector(const RealGridFunction& f) { return {f.begin(), f.end()}; }

const char* palette(std::size_t k) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return colors[k % 10];
}

}  // namespace

void cmd_potential(const Scenario& scenario, std::ostream& out) {
    const LadderSystem system = scenario.build_system();
    write_file(scenario.outdir / "potential.csv", potential_csv(system));
    const std::vector<real> x = xs(system.grid());
    const std::string svg =
        render_svg("Potential, " + scenario.profile + ", " + lambda_text(scenario.params.lambda), "x", "V(x)",
                   {{"V_R", x, to_vector(system.v_real()), "black", false},
                    {"V_I", x, to_vector(system.v_imag()), "black", true}});
    write_file(scenario.outdir / "potential.svg", svg);
    out << "wrote " << (scenario.outdir / "potential.csv").string() << " and potential.svg\n";
}

void cmd_states(const Scenario& scenario, std::ostream& out) {
    const LadderSystem system = scenario.build_system();
    const StateSet states = build_states(system, scenario.n_max);
    write_file(scenario.outdir / "states.csv", states_csv(states));
    write_file(scenario.outdir / "spectrum.json", spectrum_json(states, scenario).dump(2) + "\n");
    const std::vector<real> x = xs(system.grid());
    for (std::size_t n = 0; n < states.size(); ++n) {
        const GridFunction& psi = states.psi(n);
        const std::string title =
            "psi_" + std::to_string(n) + ", " + scenario.profile + ", " + lambda_text(scenario.params.lambda);
        const std::string svg =
            render_svg(title, "x", "psi(x)",
                       {{"Re psi_" + std::to_string(n), x, map_values(psi, [](complex z) { return z.real(); }),
                         "#1f77b4", false},
                        {"Im psi_" + std::to_string(n), x, map_values(psi, [](complex z) { return z.imag(); }),
                         "#d62728", false}});
        write_file(scenario.outdir / ("state_" + std::to_string(n) + ".svg"), svg);
    }
    for (const std::string& w : states.warnings()) out << "warning: " << w << '\n';
    out << "wrote " << states.size() << " states to " << scenario.outdir.string() << '\n';
}

bool cmd_validate(const Scenario& scenario, std::ostream& out) {
    const LadderSystem system = scenario.build_system();
    ReportOptions options;
    options.n_max = scenario.n_max;
    options.node_lambdas = scenario.sweep;
    const ValidationReport report = full_report(system, options);
    write_file(scenario.outdir / "report.json", report_json(report, scenario).dump(2) + "\n");
    for (const auto& [name, section] : report.sections()) {
        out << name << ": " << status_name(section->status);
        if (!section->note.empty() && section->status != SectionStatus::pass) out << " (" << section->note << ')';
        out << '\n';
        for (const std::string& hint : section->hints) out << "  hint: " << hint << '\n';
    }
    out << "verdict: " << (report.passed() ? "pass" : "fail") << '\n';
    return report.passed();
}

void cmd_sweep_lambda(const Scenario& scenario, std::ostream& out) {
    const MassProfile profile = make_profile(scenario.expr, scenario.domain);
    const Grid grid(scenario.domain.lo, scenario.domain.hi, scenario.grid);

    std::vector<std::future<SweepRow>> jobs;
    for (real lambda : scenario.sweep) {
        jobs.push_back(std::async(std::launch::async, [&, lambda] {
            ModelParams p = scenario.params;
            p.lambda = lambda;
            const LadderSystem system(profile, p, grid, scenario.stencil);
            GridFunction psi = ground_state(system).psi;
            return SweepRow{lambda, node_count(psi, Component::real), node_count(psi, Component::imaginary),
                            system.ground_energy(), std::move(psi)};
        }));
    }
    std::vector<SweepRow> rows;
    for (auto& job : jobs) rows.push_back(job.get());

    write_file(scenario.outdir / "sweep.csv", sweep_csv(rows));
    const std::vector<real> x = xs(grid);
    std::vector<Series> series;
    std::string lambdas;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        series.push_back({lambda_text(rows[k].lambda), x,
                          map_values(rows[k].psi0, [](complex z) { return z.real(); }), palette(k), false});
        lambdas += (k ? ", " : "") + format_g12(rows[k].lambda);
    }
    write_file(scenario.outdir / "sweep.svg",
               render_svg("Re psi_0, " + scenario.profile + ", lambda in {" + lambdas + "}", "x", "Re psi_0(x)",
                          series));
    out << "wrote " << rows.size() << " sweep rows to " << scenario.outdir.string() << '\n';
}

int execute(const std::string& command, const Scenario& scenario, std::ostream& out, std::ostream& err) {
    try {
        if (command == "potential") {
            cmd_potential(scenario, out);
        } else if (command == "states") {
            cmd_states(scenario, out);
        } else if (command == "validate") {
            return cmd_validate(scenario, out) ? exit_success : exit_validation_failure;
        } else if (command == "sweep-lambda") {
            cmd_sweep_lambda(scenario, out);
        } else {
            err << "error: unknown command '" << command << "'\n";
            return exit_io_or_config;
        }
        return exit_success;
    } catch (const DecayError& e) {
        err << "error: " << e.what() << "\n  suggested domain: [" << format_g12(e.suggested_lo()) << ", "
            << format_g12(e.suggested_hi()) << "]\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_io_or_config;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ladder-operator eigenstates for position-dependent-mass Hamiltonians with complex potentials",
                 "pdm-ladder"};
    std::string command;
    std::string config;
    // Numeric flags stay text so they reach the scenario parser unrounded.
    std::optional<std::string> profile, expr, outdir, lambda, expert_a;
    std::optional<int> nmax, stencil;
    std::optional<long> grid;
    app.add_option("command", command, "potential | states | validate | sweep-lambda")
        ->required()
        ->check(CLI::IsMember({"potential", "states", "validate", "sweep-lambda"}));
    app.add_option("--config", config, "flat key = value scenario file");
    app.add_option("--profile", profile, "catalog profile: quadratic, cosine, exponential");
    app.add_option("--expr", expr, "custom mass expression in x (needs xmin and xmax)");
    app.add_option("--lambda", lambda, "imaginary ladder constant");
    app.add_option("--nmax", nmax, "highest level to build");
    app.add_option("--grid", grid, "number of grid points");
    app.add_option("--stencil", stencil, "finite-difference accuracy order (2 or 4)");
    app.add_option("--expert-a", expert_a, "ladder scale a != hbar (breaks the factorization; diagnostic only)");
    app.add_option("--out", outdir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_or_config;
    }

    Scenario scenario;
    try {
        ConfigMap values = config.empty() ? ConfigMap{} : load_config(config);
        auto set = [&](const std::string& key, const std::string& value) { values[key] = value; };
        if (profile) {
            values.erase("expr");
            set("profile", *profile);
        }
        if (expr) {
            values.erase("profile");
            set("expr", *expr);
        }
        if (lambda) set("lambda", *lambda);
        if (nmax) set("nmax", std::to_string(*nmax));
        if (grid) set("n", std::to_string(*grid));
        if (stencil) set("stencil", std::to_string(*stencil));
        if (expert_a) {
            set("a", *expert_a);
            set("expert", "true");
        }
        if (outdir) set("outdir", *outdir);
        scenario = make_scenario(values);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_io_or_config;
    }
    return execute(command, scenario, out, err);
}

}  // namespace pdm::cli
