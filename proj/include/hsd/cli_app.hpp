// Command line driver. Parses argv-style arguments, runs the requested
// verification suite, and serializes the report as json, csv, or plain text.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsd {

// Runs the tool on `args` (program name excluded). The report goes to `out`
// unless --out redirects it to a file; diagnostics go to `err`. Returns 0 when
// every check passes, 1 when some check fails, 2 on usage or precondition
// errors (unknown operator, degree cutoff below the predicted requirement,
// unwritable --out path).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hsd
