#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSurprise = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `ffzeta` tool. `args` excludes the program name.
/// Subcommands: powersum, verify, counterexample, sweep, chen.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffzeta::cli
