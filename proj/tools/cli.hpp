#pragma once

#include <iosfwd>

namespace tgr::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 positive result, 1 negative result, 2 usage / parse /
// precondition error, 3 oracle budget exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tgr::cli
