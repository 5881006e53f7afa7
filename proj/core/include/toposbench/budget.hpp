#pragma once

#include <cstdint>

namespace toposbench {

// Upper bound on the number of elements any enumerated stage may hold.
struct Budget {
  std::uint64_t stage_elements = 1'000'000;

  // Default budget, overridden by the TOPOSBENCH_BUDGET environment variable.
  static Budget from_environment();
};

}  // namespace toposbench
