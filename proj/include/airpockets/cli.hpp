#pragma once

#include <iosfwd>

namespace airpockets {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitUsage = 64;

// Entry point of the `airpockets` command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace airpockets
