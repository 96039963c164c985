#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bowvar {

// Runs the command-line interface on the given arguments (program name
// excluded).  Returns the process exit code: 0 success, 1 domain error or
// failed selftest, 2 usage error, 3 oracle mismatch.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bowvar
