// Command-line front end, exposed as a library so tests can drive it
// directly.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsec::cli {

// Parses argv-style arguments (program name excluded) and runs the mapped
// subcommand. JSON/CSV reports go to `out` unless --out redirects them to a
// file; diagnostics go to `err`. Exit codes: 0 success, 2 argument error,
// 3 resource error, 4 probabilistic failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsec::cli
