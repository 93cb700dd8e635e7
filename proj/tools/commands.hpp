#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Parses and runs one command line. Data goes to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confcoh::cli
