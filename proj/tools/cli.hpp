#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isg::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kError = 2 };

/// Runs the isg command line on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isg::cli
