#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdm/ladder.hpp"

namespace pdm::cli {

/// Bad config text, unknown keys, or values outside the scenario invariants.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t min_scenario_grid = 201;
inline constexpr int max_scenario_nmax = 12;

struct Scenario {
    /// Catalog name, or "custom" when `expr` was given directly.
    std::string profile = "quadratic";
    std::string expr;
    Interval domain{-4, 4};
    std::size_t grid = 4001;
    Stencil stencil = Stencil::fourth;
    ModelParams params{.hbar = 1, .delta_e = 1, .lambda = 0.2L, .a = 1, .anchor = 0, .expert_a_override = false};
    int n_max = 6;
    std::vector<real> sweep{0, 1, 2, 4};
    std::filesystem::path outdir = "out";

    /// Throws ConfigError.
    void validate() const;
    /// Parses the profile and assembles the model. Throws the library errors
    /// (ParseError, PositivityError, ParameterError, GridError).
    LadderSystem build_system() const;
};

/// Ordered key/value pairs from a flat config file.
using ConfigMap = std::map<std::string, std::string>;

/// Keys accepted in config files and as overrides.
const std::vector<std::string>& config_keys();

/// One `key = value` per line; blank lines and lines starting with '#' are
/// ignored. Throws ConfigError naming the line for syntax errors, unknown or
/// repeated keys.
ConfigMap parse_config(const std::string& text);
ConfigMap load_config(const std::filesystem::path& path);

/// Applies catalog defaults for the chosen profile, then every explicit key.
/// Throws ConfigError for malformed values and invariant violations.
Scenario make_scenario(const ConfigMap& values);

}  // namespace pdm::cli
