#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toposbench/presheaf.hpp"

namespace toposbench {

// Interns fixed-width rows of elements; ids follow insertion order.
class TableIndex {
 public:
  explicit TableIndex(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }

  std::span<const Elem> row(Elem id) const {
    return {data_.data() + static_cast<std::size_t>(id) * width_, width_};
  }

  // Returns the id of row, adding it when new.
  Elem insert(std::span<const Elem> row);
  std::optional<Elem> find(std::span<const Elem> row) const;

 private:
  static std::uint64_t hash(std::span<const Elem> row);
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Elem> data_;
  std::vector<std::uint32_t> slots_;  // id + 1, zero marks an empty slot
};

}  // namespace toposbench
