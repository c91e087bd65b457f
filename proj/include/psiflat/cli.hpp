#pragma once

#include <ostream>

namespace psiflat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kOverflow = 3,
  kVerificationFailed = 4,
  kIo = 5,
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psiflat::cli
