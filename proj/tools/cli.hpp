#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpe::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInapplicable = 2, kInputError = 3 };

/// Runs the tpe command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpe::cli
