#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace p3lab::cli {

// One verification record in a run report.  `status` is "pass", "fail" or
// "recorded" (informational entries that cannot fail are "recorded");
// `witness` carries the residual, discrepancy or note as text.
struct CheckRecord {
  std::string name;
  std::string status;
  std::string witness;
  double wall_ms = 0.0;
};

// Runs a full command line (argv without the program name).  The JSON report
// goes to `out` unless the command routes it to a file; the human-readable
// table always goes to `err`.  Returns the process exit status:
//   0  every check passed
//   1  at least one check failed (or a verification aborted)
//   2  usage error (bad subcommand, option, or input payload)
//   3  internal error
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// argv-style convenience wrapper (skips argv[0]).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace p3lab::cli
