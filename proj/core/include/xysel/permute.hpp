#ifndef XYSEL_PERMUTE_HPP
#define XYSEL_PERMUTE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xysel/extended_value.hpp"
#include "xysel/padded_array.hpp"
#include "xysel/sorted_input.hpp"
#include "xysel/tracked_buffer.hpp"

namespace xysel {

using ValueBuffer = TrackedBuffer<ExtValue>;

/// Partial bit reversal, in place: move even positions to the first half
/// and odd positions to the second half, then recurse on the first half
/// only. After it, output[2^(p-1) + i - 1] == input[(2i-1) * s / 2^p] for
/// every 1 <= p < lg s, 1 <= i <= 2^(p-1). Length must be a power of two.
void pbr(ValueBuffer& z, IoSession* session = nullptr);

/// Convenience over a plain vector, untracked.
std::vector<ExtValue> pbr(std::vector<ExtValue> z);

/// Slot of X[j] in the first permuted view, for j = (2i-1) * N / 2^p with
/// j > 0 even. p is the iteration that consumes the value.
std::size_t beta1(std::size_t j, std::uint32_t p, std::size_t n_padded);

/// Slot of X[j] in the second permuted view, for j odd with
/// j + 1 = (2i-1) * N / 2^p.
std::size_t beta2(std::size_t j, std::uint32_t p, std::size_t n_padded);

/// The four auxiliary arrays that serve the cell-splitting fetches in
/// left-to-right order. x1/y1 hold the even-position elements (the new
/// low corners), x2/y2 the odd-position ones (the new high corners),
/// found through beta1/beta2. Slot 0 is never read through the betas;
/// positions >= N/2 are the unused tail of the permutation.
struct PermutedViews {
  ValueBuffer x1, x2, y1, y2;
  std::size_t n_padded = 0;
};

/// Builds all four views with two scans and a partial bit reversal per
/// view. The second view of each input permutes the sequence shifted
/// right by one (slot 0 takes a +inf sentinel), which lands X[j-1] where
/// the first view lands X[j]. Inputs must share their padded length.
PermutedViews build_views(const SortedInput& x, const SortedInput& y,
                          IoSession* session = nullptr);

/// Same, reading staged input arrays so the construction scans are
/// charged to them.
PermutedViews build_views(const PaddedArray& x, const PaddedArray& y,
                          IoSession* session = nullptr);

}  // namespace xysel

#endif  // XYSEL_PERMUTE_HPP
