#include <doctest.h>

#include "pdm/report.hpp"
#include "support.hpp"

using namespace pdm;
using pdm::test::make_system;

TEST_SUITE("validation") {

TEST_CASE("full report on the quadratic profile passes every section") {
    const ValidationReport r = full_report(make_system("1 + x^2", -4, 4, 4001, 0.2L));
    for (const auto& [name, section] : r.sections()) {
        INFO(name << ": " << section->note);
        CHECK(section->status == SectionStatus::pass);
    }
    CHECK(r.passed());
    CHECK(r.eigen.size() == 5);
    REQUIRE(r.sesquilinear_offdiagonal);
    CHECK(*r.sesquilinear_offdiagonal > 0.1L);  // informational, λ ≠ 0
    CHECK(r.thresholds.residual == 1e-6L);
}

TEST_CASE("report is deterministic") {
    const LadderSystem s = make_system("1 + x^2", -4, 4, 1001, 0.2L);
    ReportOptions o;
    o.convergence_grids = {};
    const ValidationReport a = full_report(s, o), b = full_report(s, o);
    REQUIRE(a.commutator_results.size() == b.commutator_results.size());
    for (std::size_t k = 0; k < a.commutator_results.size(); ++k) {
        CHECK(a.commutator_results[k].max_defect == b.commutator_results[k].max_defect);
    }
    CHECK(*a.factorization_h == *b.factorization_h);
}

TEST_CASE("expert a override fails factorization and skips the rest") {
    ModelParams p;
    p.a = 2;
    p.expert_a_override = true;
    const ValidationReport r = full_report(LadderSystem(make_profile("1 + x^2", {-4, 4}), p, Grid(-4, 4, 4001)));
    CHECK(r.factorization.status == SectionStatus::fail);
    CHECK(*r.factorization_h > 1e-2L);
    for (const auto& [name, section] : r.sections()) {
        if (name != "factorization") CHECK(section->status == SectionStatus::skipped);
    }
    CHECK_FALSE(r.passed());
}

TEST_CASE("single state leaves the Gram section skipped") {
    ReportOptions o;
    o.n_max = 0;
    o.convergence_grids = {};
    const ValidationReport r = full_report(make_system("1 + x^2", -4, 4, 4001, 0.2L), o);
    CHECK(r.gram.status == SectionStatus::skipped);
    CHECK(r.gram.note == "insufficient states");
    CHECK(r.residuals.status == SectionStatus::pass);
    CHECK(r.passed());
}

TEST_CASE("coarse grid fails residuals with a refinement hint") {
    ReportOptions o;
    o.convergence_grids = {};
    const ValidationReport r = full_report(make_system("1 + x^2", -4, 4, 201, 0.2L), o);
    CHECK(r.residuals.status == SectionStatus::fail);
    REQUIRE_FALSE(r.residuals.hints.empty());
    CHECK(r.residuals.hints[0].find("refine grid") != std::string::npos);
    CHECK_FALSE(r.passed());
}

TEST_CASE("section errors do not abort the report") {
    ReportOptions o;
    o.convergence_grids = {};
    // ψ₀ decays on [-3.6, 3.6]; ψ₁₂ does not, so state-based sections error out.
    o.n_max = 12;
    const ValidationReport r = full_report(make_system("1 + x^2", -3.6L, 3.6L, 2001, 0.2L), o);
    CHECK(r.residuals.status == SectionStatus::error);
    CHECK_FALSE(r.residuals.hints.empty());
    CHECK(r.annihilation.status != SectionStatus::error);
    CHECK(r.commutators.status != SectionStatus::error);
    CHECK_FALSE(r.passed());
}

TEST_CASE("node counts rise with lambda on every catalog profile") {
    struct Catalog {
        const char* m;
        real lo, hi, anchor;
        std::size_t n;
    } cats[] = {{"1 + x^2", -4, 4, 0, 4001}, {"1.1 + cos(x)", -12, 12, 0, 16001},
                {"1/(1 - exp(-1)) * exp(-x)", -6, 10, -3, 16001}};
    for (const Catalog& c : cats) {
        ReportOptions o;
        o.convergence_grids = {};
        const ValidationReport r = full_report(make_system(c.m, c.lo, c.hi, c.n, 0.2L, c.anchor), o);
        CHECK(r.nodes.status == SectionStatus::pass);
        REQUIRE(r.node_samples.size() == 4);
        CHECK(r.node_samples[0].re.count == 0);
        CHECK(r.node_samples[0].im.degenerate);
        for (std::size_t k = 1; k < 4; ++k) CHECK(r.node_samples[k].re.count >= r.node_samples[k - 1].re.count);
        CHECK(r.node_samples[3].re.count > r.node_samples[0].re.count);
    }
}

}  // TEST_SUITE
