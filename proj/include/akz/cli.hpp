#pragma once

#include <iosfwd>

namespace akz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one akzkit command. Returns 0 when nothing failed, 1
/// when a verification failed and 2 on a usage error.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace akz
