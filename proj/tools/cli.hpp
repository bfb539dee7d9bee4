#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xpk::cli {

enum ExitCode { kOk = 0, kInternal = 1, kInvalid = 2, kInconclusive = 3 };

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// the JSON report to out; diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xpk::cli
