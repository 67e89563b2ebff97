#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcp {

// One code per documented failure mode, so scripts can branch on them.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kParse = 3;
inline constexpr int kOutOfRange = 4;
inline constexpr int kBadMagic = 5;
inline constexpr int kUnsupportedVersion = 6;
inline constexpr int kTruncated = 7;
inline constexpr int kCorrupt = 8;
inline constexpr int kIo = 9;
inline constexpr int kMismatch = 10;
}  // namespace exit_code

// Full command-line tool as a function: `args` excludes the program name,
// `in`/`out`/`err` stand in for the standard streams. Never throws; every
// failure becomes an exit code plus one diagnostic line on `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lcp
