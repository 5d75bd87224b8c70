#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhs {

// Full command-line frontend. args excludes the program name.  Returns the
// process exit code: 0 on success, 1 when a computation fails (resonance,
// bracket failure), 2 on bad arguments.  All data goes to out, diagnostics
// to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace qhs
