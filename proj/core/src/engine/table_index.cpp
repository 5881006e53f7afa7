#include "toposbench/table_index.hpp"

#include <algorithm>

namespace toposbench {

std::uint64_t TableIndex::hash(std::span<const Elem> row) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ row.size();
  for (Elem v : row) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h ^ (h >> 33);
}

void TableIndex::grow() {
  const std::size_t capacity = slots_.empty() ? 64 : slots_.size() * 2;
  slots_.assign(capacity, 0);
  for (std::size_t id = 0; id < count_; ++id) {
    std::size_t slot = hash(row(static_cast<Elem>(id))) & (capacity - 1);
    while (slots_[slot] != 0) slot = (slot + 1) & (capacity - 1);
    slots_[slot] = static_cast<std::uint32_t>(id + 1);
  }
}

std::optional<Elem> TableIndex::find(std::span<const Elem> candidate) const {
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash(candidate) & mask;
  while (slots_[slot] != 0) {
    const Elem id = slots_[slot] - 1;
    const auto existing = row(id);
    if (std::equal(existing.begin(), existing.end(), candidate.begin(), candidate.end())) {
      return id;
    }
    slot = (slot + 1) & mask;
  }
  return std::nullopt;
}

Elem TableIndex::insert(std::span<const Elem> candidate) {
  if (const auto found = find(candidate)) return *found;
  if ((count_ + 1) * 2 > slots_.size()) grow();
  const Elem id = static_cast<Elem>(count_);
  data_.insert(data_.end(), candidate.begin(), candidate.end());
  ++count_;
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash(candidate) & mask;
  while (slots_[slot] != 0) slot = (slot + 1) & mask;
  slots_[slot] = id + 1;
  return id;
}

}  // namespace toposbench
