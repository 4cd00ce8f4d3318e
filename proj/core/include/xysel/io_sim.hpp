#ifndef XYSEL_IO_SIM_HPP
#define XYSEL_IO_SIM_HPP

#include <cstdint>
#include <functional>
#include <list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xysel {

/// IOs needed to read s consecutive words: 1 + ceil(s/B).
inline std::uint64_t scan_bound(std::uint64_t s, std::uint64_t b) {
  if (b < 1) throw std::invalid_argument("scan_bound: block size must be >= 1");
  return 1 + (s + b - 1) / b;
}

/// Fast-memory geometry, in words. One ExtValue, one index, or one cell
/// field counts as one word.
struct CacheConfig {
  std::uint64_t block_words;     // B
  std::uint64_t capacity_words;  // M

  CacheConfig(std::uint64_t b, std::uint64_t m) : block_words(b), capacity_words(m) {
    if (b < 1) throw std::invalid_argument("CacheConfig: B must be >= 1");
    if (m < 2 * b) throw std::invalid_argument("CacheConfig: M must be >= 2B");
    if (m % b != 0) throw std::invalid_argument("CacheConfig: B must divide M");
  }

  std::uint64_t num_blocks() const { return capacity_words / block_words; }
};

enum class AccessOutcome { hit, miss };

struct ArrayCounters {
  std::uint64_t accesses = 0;
  std::uint64_t misses = 0;
};

struct CacheSnapshot {
  std::uint64_t accesses = 0;
  std::uint64_t misses = 0;
  /// Counters per array id, nonzero entries only.
  std::vector<std::pair<std::uint32_t, ArrayCounters>> per_array;
};

/// Fully associative LRU cache of M words in B-word blocks. Each logical
/// array has its own block-index space; the key of a cache line is
/// (array_id, block_index).
class SimulatedCache {
 public:
  explicit SimulatedCache(CacheConfig config) : config_(config) {}

  const CacheConfig& config() const { return config_; }

  /// Touch one block: hit refreshes the LRU position, miss inserts and
  /// evicts the least recently used line if over capacity.
  AccessOutcome access(std::uint32_t array_id, std::uint64_t block_index);

  /// Touch the block holding word `word_index` of array `array_id`.
  AccessOutcome touch_word(std::uint32_t array_id, std::uint64_t word_index) {
    return access(array_id, word_index / config_.block_words);
  }

  std::uint64_t accesses() const { return total_.accesses; }
  std::uint64_t misses() const { return total_.misses; }

  CacheSnapshot snapshot() const;

  /// Zero all counters and empty the residency set.
  void reset();

 private:
  static std::uint64_t key(std::uint32_t array_id, std::uint64_t block_index) {
    return (static_cast<std::uint64_t>(array_id) << 40) | block_index;
  }

  CacheConfig config_;
  std::list<std::uint64_t> lru_;  // front = most recently used
  std::unordered_map<std::uint64_t, std::list<std::uint64_t>::iterator> resident_;
  ArrayCounters total_;
  std::vector<ArrayCounters> by_array_;  // indexed by array_id
  bool has_last_ = false;
  std::uint64_t last_key_ = 0;  // memo: repeated touches of the MRU line
};

/// Names the arrays of one instrumented run and fans every word access
/// out to the attached caches. Algorithms never see cache parameters;
/// attaching several caches evaluates one access sequence under several
/// (M, B) configurations at once. With no caches attached the session
/// only hands out array ids.
class IoSession {
 public:
  std::uint32_t new_array(std::string_view name) {
    names_.emplace_back(name);
    return static_cast<std::uint32_t>(names_.size() - 1);
  }

  const std::string& array_name(std::uint32_t id) const { return names_.at(id); }
  std::size_t array_count() const { return names_.size(); }

  void attach(SimulatedCache& cache) { sinks_.push_back(&cache); }

  void touch(std::uint32_t array_id, std::uint64_t word_index) {
    for (SimulatedCache* c : sinks_) c->touch_word(array_id, word_index);
    if (recorder_) recorder_(array_id, word_index);
  }

  /// Test hook: observe every (array_id, word_index) access.
  void set_recorder(std::function<void(std::uint32_t, std::uint64_t)> fn) {
    recorder_ = std::move(fn);
  }

 private:
  std::vector<SimulatedCache*> sinks_;
  std::vector<std::string> names_;
  std::function<void(std::uint32_t, std::uint64_t)> recorder_;
};

}  // namespace xysel

#endif  // XYSEL_IO_SIM_HPP
