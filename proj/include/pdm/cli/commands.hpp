#pragma once

#include <ostream>
#include <string>

#include "pdm/cli/scenario.hpp"

namespace pdm::cli {

enum ExitCode : int { exit_success = 0, exit_validation_failure = 1, exit_io_or_config = 2 };

// Each command writes into scenario.outdir and throws on failure; execute()
// maps exceptions onto exit codes.
void cmd_potential(const Scenario& scenario, std::ostream& out);
void cmd_states(const Scenario& scenario, std::ostream& out);
/// Returns true when every pass/fail section passed.
bool cmd_validate(const Scenario& scenario, std::ostream& out);
void cmd_sweep_lambda(const Scenario& scenario, std::ostream& out);

/// Runs `command` (potential, states, validate, sweep-lambda); messages for
/// failures go to `err`.
int execute(const std::string& command, const Scenario& scenario, std::ostream& out, std::ostream& err);

/// Full command line entry point: `pdm-ladder <command> [--config FILE] [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli
