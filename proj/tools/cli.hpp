#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infoatoms::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInputError = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infoatoms::cli
