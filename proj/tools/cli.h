#pragma once

#include <iosfwd>

namespace qec::cli {

// Exit codes: 0 pass, 1 domain-level failure, 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qec::cli
