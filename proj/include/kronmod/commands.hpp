#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kronmod/json_io.hpp"

namespace kronmod {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInvalid = 2, kExitNeedsExtension = 3 };

struct CommandOptions {
  /// Overrides nothing: an input document may carry its own "field", and
  /// the two must then agree. Defaults to the rationals.
  std::optional<Field> field;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::string suite = "all";
  /// eta: read a point and return a module over it.
  bool inverse = false;
  unsigned workers = 0;
};

struct CommandResult {
  int exit_code = kExitOk;
  json output;
  /// Printed one per line before the output (check: the violations).
  std::vector<json> lines;
};

/// inv, stab, nf, eta, fiber, beta, alpha, classify, snake, check.
const std::vector<std::string>& command_names();

/// Runs a command on a parsed input document. Never throws for bad input:
/// errors come back as {"error": kind, "message": ...} with exit code 2
/// (invalid input), 3 (needs a field extension) or 1 (internal defect).
CommandResult run_command(const std::string& name, const json& input, const CommandOptions& options);

}  // namespace kronmod
