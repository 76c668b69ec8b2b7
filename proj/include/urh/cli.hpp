#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace urh::cli {

// Parses a decimal literal or a rational "p/q" into a double.
// Throws ConfigError on malformed input or zero denominator.
double parse_number(const std::string& text);

// Runs the command-line front end in-process. `out` receives whatever would
// go to stdout, `err` receives diagnostics. Returns the process exit code:
// 0 success, 2 config/usage error, 3 solver failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv-style convenience wrapper used by the real entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace urh::cli
