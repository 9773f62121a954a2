#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification or oracle
// failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace balancing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balancing::cli
