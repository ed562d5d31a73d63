#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triadlab::cli {

/// Exit statuses of run().
enum Status : int { kOk = 0, kDomainError = 1, kUsageError = 2, kResourceAbort = 3 };

/// Runs one invocation; args excludes the program name. The report goes to
/// `out` (or to the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a command line on whitespace; double quotes group words.
std::vector<std::string> split_command(const std::string& line);

}  // namespace triadlab::cli
