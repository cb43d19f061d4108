#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mvt::app {

enum ExitCode : int { kPass = 0, kSpecError = 1, kNumericFailure = 2 };

struct CommandOptions {
  std::string command;  // plateau-solve, constrained-plateau, ...
  std::optional<std::string> spec_path;
  std::optional<std::string> scenario;
  std::optional<std::string> out;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  /// Write the report to `out` and exit 0 whatever the verdict.
  bool golden_regen = false;
};

struct CommandResult {
  int exit_code = kPass;
  std::string report;  // empty on spec errors
  std::string error;
};

const std::vector<std::string>& command_names();

/// Never throws; spec and usage problems come back as exit code 1.
CommandResult run_command(const CommandOptions& opts);

/// One line per builtin: name, command, summary.
std::string list_scenarios();

}  // namespace mvt::app
