#pragma once

#include <ostream>
#include <span>
#include <string>

namespace girthscope {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  /// Unknown flags, bad flag values, unsupported flag combinations.
  kExitUsage = 2,
  /// Malformed graph file.
  kExitInputParse = 3,
  /// Well-formed input that is not a valid graph or threshold.
  kExitInvalidInput = 4,
  kExitBudget = 5,
  /// Engines disagree (bench, verify).
  kExitCheckFailed = 6,
  kExitIo = 7,
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --output file), diagnostics to `err` as a single line.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace girthscope
