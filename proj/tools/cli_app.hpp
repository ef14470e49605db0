#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metlie::cli {

/// Runs the metlie command line with `args` (program name excluded) and
/// returns the process exit code.
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace metlie::cli
