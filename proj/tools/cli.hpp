#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eksr::cli {

// Runs one command line (without the program name). Writes the JSON report
// to `out` and one-line diagnostics to `err`. Returns 0 on success, 1 on
// domain errors (bad instance, cap exceeded, invalid sequence) and 2 on usage
// errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eksr::cli
