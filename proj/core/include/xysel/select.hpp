#ifndef XYSEL_SELECT_HPP
#define XYSEL_SELECT_HPP

#include <cstdint>
#include <tuple>
#include <vector>

#include "xysel/extended_value.hpp"
#include "xysel/tracked_buffer.hpp"

namespace xysel {

/// An element handed to selection: ordered by key, the payload just
/// travels along (a cell index, or nothing).
struct KeyedItem {
  ExtValue key;
  std::uint64_t payload = 0;
};

template <>
struct WordWidth<KeyedItem> {
  static constexpr std::uint32_t value = 2;
};

using KeyedBuffer = TrackedBuffer<KeyedItem>;

/// Stable three-way split around `pivot`: keys < pivot, == pivot,
/// > pivot, each class in input order. One forward scan.
std::tuple<KeyedBuffer, KeyedBuffer, KeyedBuffer> partition3(const KeyedBuffer& items,
                                                             ExtValue pivot,
                                                             IoSession* session = nullptr);

/// The key of rank k (1-based, duplicates counted) in nondecreasing
/// order. Deterministic median-of-medians with groups of 5; every pass is
/// a forward scan over a contiguous buffer, and each recursion level
/// materializes the surviving class into a fresh buffer, so the access
/// pattern stays scan-shaped. Throws std::out_of_range when k is not in
/// [1, items.size()].
ExtValue select_kth(const KeyedBuffer& items, std::uint64_t k, IoSession* session = nullptr);

/// Convenience over plain keys.
ExtValue select_kth(const std::vector<ExtValue>& keys, std::uint64_t k);

}  // namespace xysel

#endif  // XYSEL_SELECT_HPP
