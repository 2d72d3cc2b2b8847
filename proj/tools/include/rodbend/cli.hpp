#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace rodbend::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsageError = 2,
  kAccuracyError = 3,
};

/// Runs one subcommand. `args` excludes the program name. CSV goes to `out`
/// unless --out names a file, in which case the file and a PATH.json sidecar
/// are written atomically. Diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// "%.12g" with negative zero folded to zero.
std::string format_number(double v);

}  // namespace rodbend::cli
