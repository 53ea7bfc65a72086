#include "pdm/cli/report_json.hpp"

namespace pdm::cli {

using nlohmann::json;

namespace {

double d(real v) { return static_cast<double>(v); }

json optional_number(const std::optional<real>& v) { return v ? json(d(*v)) : json(nullptr); }

json complex_pair(complex z) { return json::array({d(z.real()), d(z.imag())}); }

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (complex z : row) r.push_back(complex_pair(z));
        rows.push_back(std::move(r));
    }
    return rows;
}

json section_json(const Section& s) {
    return {{"status", status_name(s.status)}, {"note", s.note}, {"hints", s.hints}};
}

json params_json(const ModelParams& p) {
    return {{"hbar", d(p.hbar)},       {"delta_e", d(p.delta_e)}, {"lambda", d(p.lambda)},
            {"a", d(p.a)},             {"anchor", d(p.anchor)},   {"expert_a_override", p.expert_a_override}};
}

json thresholds_json(const Thresholds& t) {
    return {{"annihilation", d(t.annihilation)},
            {"residual", d(t.residual)},
            {"gram_offdiagonal", d(t.gram_offdiagonal)},
            {"rayleigh_real", d(t.rayleigh_real)},
            {"rayleigh_imag", d(t.rayleigh_imag)},
            {"commutator", d(t.commutator)},
            {"heisenberg", d(t.heisenberg)},
            {"factorization", d(t.factorization)},
            {"adjointness", d(t.adjointness)},
            {"ladder_action", d(t.ladder_action)},
            {"slope_tolerance_second", d(t.slope_tolerance_second)},
            {"slope_tolerance_fourth", d(t.slope_tolerance_fourth)},
            {"node_floor", d(t.node_floor)}};
}

}  // namespace

json scenario_json(const Scenario& s) {
    return {{"profile", s.profile},
            {"expr", s.expr},
            {"domain", json::array({d(s.domain.lo), d(s.domain.hi)})},
            {"grid", s.grid},
            {"stencil", accuracy_order(s.stencil)},
            {"n_max", s.n_max},
            {"params", params_json(s.params)}};
}

json spectrum_json(const StateSet& states, const Scenario& scenario) {
    json energies = json::array(), constants = json::array();
    for (real e : states.energies()) energies.push_back(d(e));
    for (complex c : states.norm_constants()) constants.push_back(complex_pair(c));
    return {{"energies", energies},
            {"norm_constants", constants},
            {"params", params_json(scenario.params)},
            {"warnings", states.warnings()}};
}

json report_json(const ValidationReport& r, const Scenario& scenario) {
    const Thresholds& t = r.thresholds;
    json out;
    out["scenario"] = scenario_json(scenario);
    out["thresholds"] = thresholds_json(t);

    json ann = section_json(r.annihilation);
    ann["defect"] = optional_number(r.annihilation_defect);
    ann["threshold"] = d(t.annihilation);
    out["annihilation"] = ann;

    json res = section_json(r.residuals);
    res["threshold"] = d(t.residual);
    res["states"] = json::array();
    for (const EigenResidual& e : r.eigen) {
        res["states"].push_back({{"n", e.n},
                                 {"energy", d(e.energy)},
                                 {"residual", d(e.residual)},
                                 {"adjoint_residual", d(e.adjoint_residual)}});
    }
    out["residuals"] = res;

    json bil = section_json(r.gram);
    bil["threshold"] = d(t.gram_offdiagonal);
    bil["max_normalized_offdiagonal"] = optional_number(r.bilinear_offdiagonal);
    bil["matrix"] = r.grams ? matrix_json(r.grams->bilinear) : json(nullptr);
    out["gram_bilinear"] = bil;

    json ses;
    ses["note"] = "reported for comparison; not expected diagonal when lambda != 0";
    ses["max_normalized_offdiagonal"] = optional_number(r.sesquilinear_offdiagonal);
    ses["matrix"] = r.grams ? matrix_json(r.grams->sesquilinear) : json(nullptr);
    out["gram_sesquilinear"] = ses;

    json spectrum_section = section_json(r.spectrum);
    spectrum_section["threshold_real"] = d(t.rayleigh_real);
    spectrum_section["threshold_imag"] = d(t.rayleigh_imag);
    spectrum_section["rayleigh"] = json::array();
    for (const RayleighQuotient& q : r.rayleigh) {
        spectrum_section["rayleigh"].push_back({{"n", q.n}, {"value", complex_pair(q.value)}, {"expected", d(q.expected)}});
    }
    out["spectrum"] = spectrum_section;

    json com = section_json(r.commutators);
    com["test_functions"] = r.options.test_functions;
    com["seed"] = r.options.seed;
    com["results"] = json::array();
    for (const CommutatorResult& c : r.commutator_results) {
        com["results"].push_back(
            {{"name", commutator_name(c.which)}, {"max_defect", d(c.max_defect)}, {"threshold", d(c.threshold)}});
    }
    out["commutators"] = com;

    json fac = section_json(r.factorization);
    fac["threshold"] = d(t.factorization);
    fac["h"] = optional_number(r.factorization_h);
    fac["h_adjoint"] = optional_number(r.factorization_hdag);
    out["factorization"] = fac;

    json adj = section_json(r.adjointness);
    adj["threshold"] = d(t.adjointness);
    adj["raising"] = optional_number(r.adjointness_raising);
    adj["lowering"] = optional_number(r.adjointness_lowering);
    out["adjointness"] = adj;

    json act = section_json(r.ladder_action);
    act["threshold"] = d(t.ladder_action);
    act["defects"] = json::array();
    for (real v : r.raising_defects) act["defects"].push_back(d(v));
    out["ladder_action"] = act;

    json conv = section_json(r.convergence);
    conv["studies"] = json::array();
    for (const ConvergenceResult& c : r.convergence_results) {
        json errors = json::array(), spacings = json::array();
        for (real e : c.study.errors) errors.push_back(d(e));
        for (real h : c.study.spacings) spacings.push_back(d(h));
        conv["studies"].push_back({{"stencil", c.stencil_order},
                                   {"sizes", c.study.sizes},
                                   {"spacings", spacings},
                                   {"errors", errors},
                                   {"slope", optional_number(c.study.slope)},
                                   {"expected_slope", d(c.expected_slope)},
                                   {"tolerance", d(c.tolerance)},
                                   {"exact", c.study.exact},
                                   {"note", c.study.note}});
    }
    out["convergence"] = conv;

    json nodes = section_json(r.nodes);
    nodes["amplitude_floor"] = d(t.node_floor);
    nodes["samples"] = json::array();
    for (const NodeSample& s : r.node_samples) {
        nodes["samples"].push_back({{"lambda", d(s.lambda)},
                                    {"node_count_re", s.re.count},
                                    {"node_count_im", s.im.count},
                                    {"re_degenerate", s.re.degenerate},
                                    {"im_degenerate", s.im.degenerate},
                                    {"E0", d(s.e0)}});
    }
    out["nodes"] = nodes;

    out["warnings"] = r.warnings;
    out["verdict"] = r.passed() ? "pass" : "fail";
    return out;
}

}  // namespace pdm::cli
