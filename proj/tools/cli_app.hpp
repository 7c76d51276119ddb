#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parity::cli {

// exit codes follow conventional tool semantics so scripts can branch on them
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 2;       // a theorem oracle reported a violation
inline constexpr int kExitDomainError = 3;     // hypotheses / modulus / family-size errors
inline constexpr int kExitUsage = 64;          // unknown command or bad flags
inline constexpr int kExitParse = 65;          // expression parse failure

/// Runs one parity-lab command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parity::cli
