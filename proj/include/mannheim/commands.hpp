#pragma once

// The four CLI commands. Exit codes: 0 success, 1 input or environment
// error, 2 verification failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mannheim/config.hpp"

namespace mannheim {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitVerificationFailed = 2 };

struct CommandLine {
  std::string command;
  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::optional<Interval> v_range;
  std::optional<std::size_t> v_count;
  std::vector<std::string> tolerance_overrides;
};

/// Loads the config (defaults when none is given) and applies command-line overrides.
RunConfig resolve_config(const CommandLine& cl);

int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_offset(const RunConfig& config, std::ostream& out);
int cmd_mesh(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches and maps every exception to exit code 1 with a message on `err`.
int run_command(const CommandLine& cl, std::ostream& out, std::ostream& err);

}  // namespace mannheim
