#include "xysel/io_sim.hpp"

namespace xysel {

AccessOutcome SimulatedCache::access(std::uint32_t array_id, std::uint64_t block_index) {
  if (by_array_.size() <= array_id) by_array_.resize(array_id + 1);
  ArrayCounters& arr = by_array_[array_id];
  ++total_.accesses;
  ++arr.accesses;

  const std::uint64_t k = key(array_id, block_index);
  if (has_last_ && k == last_key_) return AccessOutcome::hit;  // still MRU

  auto it = resident_.find(k);
  if (it != resident_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    has_last_ = true;
    last_key_ = k;
    return AccessOutcome::hit;
  }

  ++total_.misses;
  ++arr.misses;
  lru_.push_front(k);
  resident_[k] = lru_.begin();
  if (resident_.size() > config_.num_blocks()) {
    resident_.erase(lru_.back());
    lru_.pop_back();
  }
  has_last_ = true;
  last_key_ = k;
  return AccessOutcome::miss;
}

CacheSnapshot SimulatedCache::snapshot() const {
  CacheSnapshot s;
  s.accesses = total_.accesses;
  s.misses = total_.misses;
  for (std::uint32_t id = 0; id < by_array_.size(); ++id)
    if (by_array_[id].accesses != 0) s.per_array.emplace_back(id, by_array_[id]);
  return s;
}

void SimulatedCache::reset() {
  lru_.clear();
  resident_.clear();
  total_ = {};
  by_array_.clear();
  has_last_ = false;
}

}  // namespace xysel
