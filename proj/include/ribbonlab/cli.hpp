#pragma once

// Command dispatcher behind the ribbonlab executable.

#include "ribbonlab/json_io.hpp"

#include <string>
#include <vector>

namespace ribbonlab {

struct CliOutcome {
  int exit_code = 0;  // 0 ok, 1 error, 2 verify found failing properties
  std::string text;   // what the executable prints on stdout
  Json result;        // {"status", "payload"[, "timing_ms"]}
};

/// Runs one command. `args` excludes the program name. Never throws.
CliOutcome run_cli(const std::vector<std::string>& args);

}  // namespace ribbonlab
