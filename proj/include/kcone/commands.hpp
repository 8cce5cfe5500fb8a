#pragma once

// Subcommand dispatcher shared by the C API and the command-line tool.
// Every command reads one JSON document and writes one JSON document.

#include <optional>
#include <string>
#include <vector>

#include "kcone/weyl.hpp"

namespace kcone::commands {

struct Options {
  long max_steps = kDefaultMaxSteps;
  std::optional<long> bound;  // census bound; overrides the input field
  std::string data_dir;       // where verify-thm22 looks for its fixture
};

enum ExitCode { kOk = 0, kDomainError = 1, kMalformed = 2 };

struct Result {
  std::string output;  // JSON text, newline terminated
  int exit_code = kOk;
};

const std::vector<std::string>& names();

/// Errors never escape: domain errors give exit code 1 and malformed input
/// exit code 2, with {"error": CODE, "message": ...} as output.
Result run(const std::string& command, const std::string& input, const Options& options = {});

/// Writes the printed permutation fixture and the golden command outputs
/// under `dir`; returns the files written. Throws std::runtime_error on I/O
/// failure.
std::vector<std::string> emit_fixtures(const std::string& dir);

}  // namespace kcone::commands
