#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace opalg::cli {

/// Runs one subcommand and writes a JSON report to `out`.
///
/// Exit codes: 0 for status ok/absent (a negative mathematical answer is not
/// a failure), 1 for a refuted invariant, 2 for usage, I/O or precondition
/// errors. The OPALG_TOL environment variable overrides the default tolerance
/// scalar; an explicit --tol flag wins over the environment.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace opalg::cli
