#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdm/validation.hpp"

namespace pdm {

enum class SectionStatus { pass, fail, skipped, error };

const char* status_name(SectionStatus s) noexcept;

/// Pass/fail limits. Every report carries the values it was judged against.
struct Thresholds {
    real annihilation = 1e-8L;
    real residual = 1e-6L;
    real gram_offdiagonal = 1e-6L;
    real rayleigh_real = 1e-6L;
    real rayleigh_imag = 1e-8L;
    real commutator = 1e-6L;
    real heisenberg = 1e-8L;
    real factorization = 1e-6L;
    real adjointness = 1e-8L;
    real ladder_action = 1e-6L;
    real slope_tolerance_second = 0.3L;
    real slope_tolerance_fourth = 0.5L;
    real node_floor = 1e-6L;
};

struct ReportOptions {
    int n_max = 4;
    /// Empty disables the convergence section.
    std::vector<std::size_t> convergence_grids{501, 1001, 2001, 4001};
    std::vector<real> node_lambdas{0, 1, 2, 4};
    std::size_t test_functions = 20;
    std::uint64_t seed = default_test_seed;
    Thresholds thresholds{};
};

struct Section {
    SectionStatus status = SectionStatus::skipped;
    std::string note;
    std::vector<std::string> hints;
};

struct CommutatorResult {
    Commutator which;
    real max_defect;
    real threshold;
};

struct ConvergenceResult {
    int stencil_order;
    ConvergenceStudy study;
    real expected_slope;
    real tolerance;
};

struct NodeSample {
    real lambda;
    NodeCount re;
    NodeCount im;
    real e0;
};

struct ValidationReport {
    Thresholds thresholds;
    ReportOptions options;

    Section annihilation;
    std::optional<real> annihilation_defect;

    Section residuals;
    std::vector<EigenResidual> eigen;

    /// Verdict uses the bilinear Gram; the sesquilinear one is informational.
    Section gram;
    std::optional<GramMatrices> grams;
    std::optional<real> bilinear_offdiagonal;
    std::optional<real> sesquilinear_offdiagonal;

    Section spectrum;
    std::vector<RayleighQuotient> rayleigh;

    Section commutators;
    std::vector<CommutatorResult> commutator_results;

    Section factorization;
    std::optional<real> factorization_h;
    std::optional<real> factorization_hdag;

    Section adjointness;
    std::optional<real> adjointness_raising;
    std::optional<real> adjointness_lowering;

    Section ladder_action;
    std::vector<real> raising_defects;

    Section convergence;
    std::vector<ConvergenceResult> convergence_results;

    Section nodes;
    std::vector<NodeSample> node_samples;

    std::vector<std::string> warnings;

    /// True when no section failed or errored. Skipped sections do not count.
    bool passed() const noexcept;
    /// (name, section) pairs in report order.
    std::vector<std::pair<std::string, const Section*>> sections() const;
};

/// Runs every section; sections execute concurrently and a failure or exception
/// in one is recorded there without affecting the others. With a != ħ only the
/// factorization section runs.
ValidationReport full_report(const LadderSystem& system, const ReportOptions& options = {});

}  // namespace pdm
