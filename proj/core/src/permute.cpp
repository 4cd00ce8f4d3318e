#include "xysel/permute.hpp"

#include <bit>
#include <stdexcept>

namespace xysel {

namespace {

void pbr_level(ValueBuffer& z, std::size_t s, IoSession* session) {
  if (s <= 1) return;
  ValueBuffer even(session, "pbr.even", s / 2);
  ValueBuffer odd(session, "pbr.odd", s / 2);
  for (std::size_t i = 0; i < s; ++i) {
    if (i % 2 == 0)
      even.set(i / 2, z.get(i));
    else
      odd.set((i - 1) / 2, z.get(i));
  }
  for (std::size_t i = 0; i < s / 2; ++i) z.set(i, even.get(i));
  for (std::size_t i = s / 2; i < s; ++i) z.set(i, odd.get(i - s / 2));
  pbr_level(z, s / 2, session);
}

}  // namespace

void pbr(ValueBuffer& z, IoSession* session) {
  if (!std::has_single_bit(z.size()))
    throw std::invalid_argument("pbr: length must be a power of two");
  pbr_level(z, z.size(), session);
}

std::vector<ExtValue> pbr(std::vector<ExtValue> z) {
  ValueBuffer buf(nullptr, "", std::move(z));
  pbr(buf);
  return std::move(buf).take();
}

std::size_t beta1(std::size_t j, std::uint32_t p, std::size_t n_padded) {
  const std::size_t stride = p < 1 ? 0 : n_padded >> p;  // N / 2^p
  if (stride < 2 || j >= n_padded || j % (2 * stride) != stride)
    throw std::invalid_argument("beta1: index not of the form (2i-1)*N/2^p");
  // 2^(p-1) + (j * 2^p / N + 1) / 2 - 1, all divisions exact.
  return (std::size_t{1} << (p - 1)) + (j / stride + 1) / 2 - 1;
}

std::size_t beta2(std::size_t j, std::uint32_t p, std::size_t n_padded) {
  const std::size_t stride = p < 1 ? 0 : n_padded >> p;
  if (stride < 2 || j + 1 >= n_padded || (j + 1) % (2 * stride) != stride)
    throw std::invalid_argument("beta2: index+1 not of the form (2i-1)*N/2^p");
  return (std::size_t{1} << (p - 1)) + ((j + 1) / stride + 1) / 2 - 1;
}

namespace {

template <class Source>
ValueBuffer permuted_view(const Source& in, bool shifted, const char* name,
                          IoSession* session) {
  const std::size_t n = in.padded_len();
  ValueBuffer buf(session, name, n);
  if (shifted) {
    buf.set(0, ExtValue::pos_inf());
    for (std::size_t i = 1; i < n; ++i) buf.set(i, in.at(i - 1));
  } else {
    for (std::size_t i = 0; i < n; ++i) buf.set(i, in.at(i));
  }
  pbr(buf, session);
  return buf;
}

struct LogicalSource {
  const SortedInput& in;
  std::size_t padded_len() const { return in.padded_len(); }
  ExtValue at(std::size_t i) const { return in.logical_at(i); }
};

template <class Source>
PermutedViews build_views_impl(const Source& x, const Source& y, IoSession* session) {
  if (x.padded_len() != y.padded_len())
    throw std::invalid_argument("build_views: inputs must share their padded length");
  PermutedViews v;
  v.n_padded = x.padded_len();
  v.x1 = permuted_view(x, false, "views.x1", session);
  v.x2 = permuted_view(x, true, "views.x2", session);
  v.y1 = permuted_view(y, false, "views.y1", session);
  v.y2 = permuted_view(y, true, "views.y2", session);
  return v;
}

}  // namespace

PermutedViews build_views(const SortedInput& x, const SortedInput& y, IoSession* session) {
  return build_views_impl(LogicalSource{x}, LogicalSource{y}, session);
}

PermutedViews build_views(const PaddedArray& x, const PaddedArray& y, IoSession* session) {
  return build_views_impl(x, y, session);
}

}  // namespace xysel
