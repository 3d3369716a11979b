#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ztile {

enum class CliStatus { ok = 0, violation = 1, error = 2 };

/// Result of one CLI invocation. payload follows the per-command JSON
/// schema; human is the text rendering of the same content. status maps
/// to the exit code: 0 ok, 1 violation (valid input, property fails),
/// 2 usage or parse error.
struct CommandResult {
  CliStatus status = CliStatus::ok;
  nlohmann::ordered_json payload;
  std::string message;
  std::string human;
  bool json_mode = false;
  bool jsonl = false;  // payload is an array printed one element per line
};

/// Run one command given argv-style arguments (program name excluded).
CommandResult run_cli(const std::vector<std::string>& args);

/// Parse, run, print, and return the process exit code.
int run_cli_main(int argc, char** argv);

}  // namespace ztile
