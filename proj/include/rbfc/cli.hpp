#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbfc {

// Runs one CLI command; returns the process exit code. Categorized errors
// print as "error: <category>: <message>" on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rbfc
