#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compound::cli {

// Parses and dispatches one invocation.  Results go to out, diagnostics to
// err.  Exit codes: 0 success, 2 validation/usage error, 3 budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace compound::cli
