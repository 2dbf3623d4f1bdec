#pragma once

// Command-line front end. Subcommands: gen, event, estimate, sweep, embed,
// oracle, verify.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 the method reported
// infeasible / none / a failed verification, 3 oracle budget exhausted.

#include <iosfwd>

namespace wordperc::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kBudget = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wordperc::cli
