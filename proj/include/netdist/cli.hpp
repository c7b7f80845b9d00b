#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netdist::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,           ///< parse/config errors, invalid parameters
  kCorrespondence = 3,  ///< SizeMismatch, Disconnected
  kDegenerateNull = 4,
  kZeroMean = 5,
  kRetriesExhausted = 6,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netdist::cli
