#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quadff::cli {

/// Runs one quadff invocation; args excludes the program name. Reports go
/// to out, diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Replays the published curves and the invariant suites, one line per
/// check. Returns 0 when every check passes.
int selftest(unsigned jobs, std::ostream& out);

}  // namespace quadff::cli
