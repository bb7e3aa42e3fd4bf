#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ndlogic::cli {

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 valid / proved / pass, 1 invalid / not proved / fail,
/// 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ndlogic::cli
