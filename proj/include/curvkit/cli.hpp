#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvkit {

// Runs one CLI invocation. Reports go to `out`, diagnostics to `err`.
// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input
// error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace curvkit
