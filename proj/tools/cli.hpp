#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the commgraph command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commgraph::cli
