#pragma once

#include <json.hpp>

#include "pdm/cli/scenario.hpp"
#include "pdm/report.hpp"
#include "pdm/states.hpp"

namespace pdm::cli {

nlohmann::json scenario_json(const Scenario& scenario);

/// Keys `energies`, `norm_constants` ([re, im] pairs) and `params`.
nlohmann::json spectrum_json(const StateSet& states, const Scenario& scenario);

/// Layout described by schemas/report.schema.json.
nlohmann::json report_json(const ValidationReport& report, const Scenario& scenario);

}  // namespace pdm::cli
