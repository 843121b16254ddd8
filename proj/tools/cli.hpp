#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tww::cli {

enum ExitCode : int { success = 0, usage_error = 1, verification_failed = 2, cap_exceeded = 3 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tww::cli
