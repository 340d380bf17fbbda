#pragma once

#include <iosfwd>

namespace powerexp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// A verified claim failed its audit, or a sequence disagreed with its b-file.
inline constexpr int kExitClaimFailed = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace powerexp::cli
