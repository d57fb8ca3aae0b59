#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pointscheme::cli {

enum class Command { gamma, stabilize, sigma, verify, segre_check };

struct RunConfig {
  Command command = Command::gamma;
  std::string input;
  std::size_t n = 1;
  std::size_t n_max = 4;
  std::size_t d = 1;
  std::uint64_t cap = 10'000'000;
  unsigned jobs = 1;
  /// Empty means standard output.
  std::string output;
};

enum ExitStatus : int {
  ok = 0,
  usage_error = 1,
  parse_failure = 2,
  precondition_failure = 3,
  cap_exceeded = 4,
  property_failure = 5,
};

struct RunResult {
  int status = ok;
  std::string out;
  std::string err;
};

/// Executes one command against the algebra file named by cfg.input.  Never
/// throws; failures are reported through the status and `err`.
RunResult run(const RunConfig& cfg);

/// Same, with the algebra text supplied directly.
RunResult run_on_text(const RunConfig& cfg, const std::string& text, const std::string& name);

/// Parses argv into a config; on failure returns the CLI11 exit code and
/// message through `result`.
bool parse_args(int argc, char** argv, RunConfig& cfg, RunResult& result);

}  // namespace pointscheme::cli
