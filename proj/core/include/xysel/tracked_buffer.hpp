#ifndef XYSEL_TRACKED_BUFFER_HPP
#define XYSEL_TRACKED_BUFFER_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "xysel/extended_value.hpp"
#include "xysel/io_sim.hpp"

namespace xysel {

/// Words occupied by one element of a tracked array. Specialized per
/// element type; indices and values count one word each.
template <class T>
struct WordWidth;

template <>
struct WordWidth<double> {
  static constexpr std::uint32_t value = 1;
};

template <>
struct WordWidth<ExtValue> {
  static constexpr std::uint32_t value = 1;
};

/// A contiguous array whose element reads and writes are reported to an
/// IoSession, word by word. With a null session it behaves like a plain
/// vector. Adopting existing data does not count as IO (the array is
/// modeled as already laid out in slow memory); only get/set/push_back
/// touch words.
template <class T>
class TrackedBuffer {
 public:
  static constexpr std::uint32_t words_per_element = WordWidth<T>::value;

  TrackedBuffer() = default;  // untracked, empty

  TrackedBuffer(IoSession* session, std::string_view name) { bind(session, name); }

  TrackedBuffer(IoSession* session, std::string_view name, std::size_t count) : v_(count) {
    bind(session, name);
  }

  TrackedBuffer(IoSession* session, std::string_view name, std::vector<T> data)
      : v_(std::move(data)) {
    bind(session, name);
  }

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  void reserve(std::size_t n) { v_.reserve(n); }

  T get(std::size_t i) const {
    assert(i < v_.size());
    touch(i);
    return v_[i];
  }

  void set(std::size_t i, const T& x) {
    assert(i < v_.size());
    touch(i);
    v_[i] = x;
  }

  void push_back(const T& x) {
    touch(v_.size());
    v_.push_back(x);
  }

  /// Untracked view for verification code and tests; never used on an
  /// instrumented data path.
  const std::vector<T>& raw() const { return v_; }
  std::vector<T> take() && { return std::move(v_); }

  IoSession* session() const { return session_; }
  std::uint32_t array_id() const { return id_; }

 private:
  void bind(IoSession* session, std::string_view name) {
    session_ = session;
    if (session_) id_ = session_->new_array(name);
  }

  void touch(std::size_t i) const {
    if (!session_) return;
    const std::uint64_t w0 = static_cast<std::uint64_t>(i) * words_per_element;
    for (std::uint32_t w = 0; w < words_per_element; ++w) session_->touch(id_, w0 + w);
  }

  std::vector<T> v_;
  IoSession* session_ = nullptr;
  std::uint32_t id_ = 0;
};

}  // namespace xysel

#endif  // XYSEL_TRACKED_BUFFER_HPP
