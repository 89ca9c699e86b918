#pragma once

// The `lineroot` command line, callable in-process so tests can drive it
// with string streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace lineroot::cli {

enum ExitCode : int {
  ok = 0,
  not_line_graph = 1,
  malformed_input = 2,
  disconnected = 3,
  verification_failed = 4,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lineroot::cli
