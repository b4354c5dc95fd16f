#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yh {

// Full command-line front end; returns the process exit code. Output goes to
// out, machine-readable errors (one JSON object) to err. Identical argument
// vectors produce byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yh
