#ifndef XYSEL_PADDED_ARRAY_HPP
#define XYSEL_PADDED_ARRAY_HPP

#include <stdexcept>
#include <string_view>

#include "xysel/extended_value.hpp"
#include "xysel/sorted_input.hpp"
#include "xysel/tracked_buffer.hpp"

namespace xysel {

/// An input array staged in (tracked) slow memory together with its
/// implicit +inf padding. Reads past the real length synthesize the
/// sentinel and cost no IO.
class PaddedArray {
 public:
  PaddedArray(IoSession* session, std::string_view name, const SortedInput& in)
      : data_(session, name, in.values()), padded_len_(in.padded_len()) {}

  std::size_t padded_len() const { return padded_len_; }
  std::size_t size() const { return data_.size(); }

  ExtValue at(std::size_t i) const {
    if (i >= padded_len_) throw std::out_of_range("PaddedArray: index past padded length");
    return i < data_.size() ? ExtValue::finite(data_.get(i)) : ExtValue::pos_inf();
  }

 private:
  TrackedBuffer<double> data_;
  std::size_t padded_len_;
};

}  // namespace xysel

#endif  // XYSEL_PADDED_ARRAY_HPP
