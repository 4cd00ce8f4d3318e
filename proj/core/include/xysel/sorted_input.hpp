#ifndef XYSEL_SORTED_INPUT_HPP
#define XYSEL_SORTED_INPUT_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xysel/extended_value.hpp"

namespace xysel {

/// Smallest power of two >= max(m, n). Both inputs of one selection
/// instance are padded to this common length.
std::size_t pad_length(std::size_t m, std::size_t n);

/// Thrown when an input sequence is not nondecreasing. `index` is the
/// position of the first element that breaks the order.
class SortednessError : public std::invalid_argument {
 public:
  SortednessError(std::size_t index, std::string what)
      : std::invalid_argument(std::move(what)), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A validated nondecreasing sequence of finite values, logically padded
/// with +inf sentinels up to a power-of-two length. The padding is never
/// materialized; logical_at() synthesizes it.
class SortedInput {
 public:
  /// Validates and adopts `values`; padded_len defaults to the smallest
  /// power of two >= values.size(). Throws std::invalid_argument on
  /// empty or non-finite input, SortednessError on order violations.
  explicit SortedInput(std::vector<double> values);
  SortedInput(std::vector<double> values, std::size_t padded_len);

  std::size_t size() const { return values_.size(); }
  std::size_t padded_len() const { return padded_len_; }
  const std::vector<double>& values() const { return values_; }

  /// Element i of the logical padded sequence: values[i] for i < size(),
  /// +inf for size() <= i < padded_len(). i >= padded_len() is a
  /// contract violation.
  ExtValue logical_at(std::size_t i) const {
    if (i >= padded_len_) throw std::out_of_range("logical_at: index past padded length");
    return i < values_.size() ? ExtValue::finite(values_[i]) : ExtValue::pos_inf();
  }

  /// Builds the two inputs of one instance with their shared padded length.
  static std::pair<SortedInput, SortedInput> make_pair(std::vector<double> x,
                                                       std::vector<double> y);

 private:
  std::vector<double> values_;
  std::size_t padded_len_;
};

}  // namespace xysel

#endif  // XYSEL_SORTED_INPUT_HPP
