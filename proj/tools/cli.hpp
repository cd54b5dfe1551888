#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcfree::cli {

enum ExitCode { pass = 0, failure = 1, usage = 2 };

/// Runs one command line (args excludes the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace arcfree::cli
