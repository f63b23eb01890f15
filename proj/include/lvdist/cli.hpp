#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvdist {

/// Entry point of the `lvdist` tool. `args` excludes the program name.
/// Returns 0 on success, 1 on usage errors, 2 on domain errors. Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lvdist
