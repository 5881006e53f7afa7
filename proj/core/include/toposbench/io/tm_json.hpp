#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toposbench/machines/tm.hpp"

namespace toposbench::io {

// {"states", "alphabet", "blank", "q0", "qf", "delta": {"q,s": [[q', s', "L"|"R"], ...]}}
// and an optional "fin" notion ("kuratowski" when absent). Keys split at the
// first comma. Throws MalformedInput.
machines::TMSpec parse_tm(std::string_view text);
machines::TMSpec load_tm(const std::filesystem::path& path);
std::string serialize_tm(const machines::TMSpec& tm);

// Cells from the leftmost to the rightmost non-blank cell; empty tapes have offset 0.
struct TapeView {
  std::int64_t offset = 0;
  std::vector<std::string> cells;
};

TapeView tape_view(const machines::TMSpec& tm, const machines::Configuration& c);

}  // namespace toposbench::io
