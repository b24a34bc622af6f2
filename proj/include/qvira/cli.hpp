#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qvira {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // Inconsistent, violations, failed checks
inline constexpr int kExitUsage = 2;     // bad flags, unreadable or malformed input

/// Runs one command; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qvira
