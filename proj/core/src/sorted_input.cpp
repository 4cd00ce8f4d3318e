#include "xysel/sorted_input.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace xysel {

std::size_t pad_length(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("pad_length: lengths must be >= 1");
  return std::bit_ceil(m > n ? m : n);
}

namespace {

std::vector<double> validate(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("input must hold at least one value");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw std::invalid_argument("non-finite value at index " + std::to_string(i));
    if (i > 0 && values[i] < values[i - 1])
      throw SortednessError(i, "not nondecreasing at index " + std::to_string(i));
  }
  return values;
}

}  // namespace

SortedInput::SortedInput(std::vector<double> values)
    : values_(validate(std::move(values))), padded_len_(std::bit_ceil(values_.size())) {}

SortedInput::SortedInput(std::vector<double> values, std::size_t padded_len)
    : values_(validate(std::move(values))), padded_len_(padded_len) {
  if (!std::has_single_bit(padded_len_) || padded_len_ < values_.size())
    throw std::invalid_argument("padded length must be a power of two >= size");
}

std::pair<SortedInput, SortedInput> SortedInput::make_pair(std::vector<double> x,
                                                           std::vector<double> y) {
  const std::size_t n = pad_length(x.size(), y.size());
  return {SortedInput(std::move(x), n), SortedInput(std::move(y), n)};
}

}  // namespace xysel
