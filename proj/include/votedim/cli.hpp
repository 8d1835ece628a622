#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace votedim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1-28", "1,3,5-7", "L15", "W12".
std::vector<int> parse_coalition_spec(const std::string& spec);

}  // namespace votedim::cli
