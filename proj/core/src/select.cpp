#include "xysel/select.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace xysel {

namespace {

struct KeyLess {
  bool operator()(const KeyedItem& a, const KeyedItem& b) const { return a.key < b.key; }
};

// Median of at most five items held in registers.
ExtValue small_median(std::array<KeyedItem, 5>& g, std::size_t len) {
  std::sort(g.begin(), g.begin() + len, KeyLess{});
  return g[(len - 1) / 2].key;
}

ExtValue select_impl(const KeyedBuffer& items, std::uint64_t k, IoSession* session) {
  const KeyedBuffer* cur = &items;
  KeyedBuffer owned;
  // Tail recursion unrolled into a loop so the two discarded classes of
  // each partition are freed before descending.
  for (;;) {
    const std::size_t s = cur->size();
    if (s <= 5) {
      std::array<KeyedItem, 5> local;
      for (std::size_t i = 0; i < s; ++i) local[i] = cur->get(i);
      std::sort(local.begin(), local.begin() + s, KeyLess{});
      return local[k - 1].key;
    }

    // One forward scan: median of each group of five; the leftover group
    // (fewer than five items) uses its own median.
    KeyedBuffer medians(session, "select.medians");
    medians.reserve((s + 4) / 5);
    std::array<KeyedItem, 5> group;
    std::size_t fill = 0;
    for (std::size_t i = 0; i < s; ++i) {
      group[fill++] = cur->get(i);
      if (fill == 5 || i + 1 == s) {
        medians.push_back(KeyedItem{small_median(group, fill), 0});
        fill = 0;
      }
    }
    const ExtValue pivot = select_impl(medians, (medians.size() + 1) / 2, session);
    medians = KeyedBuffer();

    auto [below, equal, above] = partition3(*cur, pivot, session);
    if (k <= below.size()) {
      owned = std::move(below);
    } else if (k <= below.size() + equal.size()) {
      return pivot;
    } else {
      k -= below.size() + equal.size();
      owned = std::move(above);
    }
    cur = &owned;
  }
}

}  // namespace

std::tuple<KeyedBuffer, KeyedBuffer, KeyedBuffer> partition3(const KeyedBuffer& items,
                                                             ExtValue pivot,
                                                             IoSession* session) {
  KeyedBuffer below(session, "select.below");
  KeyedBuffer equal(session, "select.equal");
  KeyedBuffer above(session, "select.above");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const KeyedItem it = items.get(i);
    if (it.key < pivot)
      below.push_back(it);
    else if (it.key == pivot)
      equal.push_back(it);
    else
      above.push_back(it);
  }
  return {std::move(below), std::move(equal), std::move(above)};
}

ExtValue select_kth(const KeyedBuffer& items, std::uint64_t k, IoSession* session) {
  if (k < 1 || k > items.size()) throw std::out_of_range("select_kth: rank out of bounds");
  return select_impl(items, k, session);
}

ExtValue select_kth(const std::vector<ExtValue>& keys, std::uint64_t k) {
  std::vector<KeyedItem> items;
  items.reserve(keys.size());
  for (ExtValue v : keys) items.push_back(KeyedItem{v, 0});
  return select_kth(KeyedBuffer(nullptr, "", std::move(items)), k);
}

}  // namespace xysel
