#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qadm {

// Exit codes besides 0 (success / "yes") and 1 ("no").
inline constexpr int kExitUsage = 10;
inline constexpr int kExitResource = 11;
inline constexpr int kExitFailure = 12;

// Runs the command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qadm
