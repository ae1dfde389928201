#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rmas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Data goes to `out` or
/// to the --out file, diagnostics to `err`; input is read from --in or `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rmas::cli
