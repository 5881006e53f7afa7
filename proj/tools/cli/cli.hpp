#pragma once

#include <ostream>

namespace toposbench::cli {

// Exit codes: 0 when every verdict was computed, 1 on a property or
// validation failure, 2 on malformed input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMalformed = 2;

// Runs one command. The JSON report goes to out, a one-line summary to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toposbench::cli
