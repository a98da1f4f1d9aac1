#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kgqa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and help text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgqa::cli
