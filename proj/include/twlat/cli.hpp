// Command-line front end. Every subcommand writes JSON lines to `out` and
// diagnostics to `err`.
#pragma once

#include <iosfwd>

namespace twlat {

enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitUsage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twlat
