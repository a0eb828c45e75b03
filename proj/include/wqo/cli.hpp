#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wqo::cli {

// Exit statuses.
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wqo::cli
