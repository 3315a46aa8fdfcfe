#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tars::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;

/// Runs one invocation. args excludes the program name. Results go to out;
/// diagnostics and error objects go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tars::cli
