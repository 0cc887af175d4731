#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mla {

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics and timing to `err`. Returns 0 on success, 1 when
/// violations or failed preconditions were found, 2 on usage or IO errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mla
