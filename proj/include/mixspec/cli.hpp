#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixspec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Malformed input and unknown
/// subcommands return kExitUsage; a failed verification returns kExitDiscrepancy.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mixspec
