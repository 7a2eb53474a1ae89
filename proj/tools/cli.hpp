#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galg::cli {

/// Runs the command line given as argv-style arguments (without the program
/// name).  Exit status: 0 on success, 1 when a mathematical check fails,
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galg::cli
