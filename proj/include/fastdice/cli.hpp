#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fastdice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;

// Parses a seed given as decimal, 0x-prefixed hex, or "random" (system
// entropy). Throws std::invalid_argument on anything else.
std::uint64_t parse_seed(const std::string& text);

// Formats a real with 9 significant digits, independent of locale.
std::string format_real(double x);

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; returns the process exit status.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fastdice::cli
