#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dirichlet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompute = 2;

// Runs one command line (without the program name). Human or JSON output goes
// to `out`, diagnostics to `err`. Returns 0, 1 (usage error) or 2 (computation error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirichlet::cli
