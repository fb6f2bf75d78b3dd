#pragma once

// Command dispatch shared by the CLI and the tests: runs one command on an
// ideal and renders the result as text lines and as a JSON document.

#include <string>
#include <vector>

#include <json.hpp>

#include "modpar/modstd.hpp"

namespace modpar {

using Json = nlohmann::ordered_json;

struct CommandResult {
  Json document;  // "timings" is the only schedule-dependent member
  std::vector<std::string> lines;
};

/// command is one of gb, radical, assprimes, primary, factor. Throws
/// std::invalid_argument for an unknown command or unsuitable input.
CommandResult run_command(const std::string& command, const Ideal& I, const ModStdConfig& config);

/// Compact dump of `document` with the timings removed.
std::string deterministic_dump(const Json& document);

}  // namespace modpar
