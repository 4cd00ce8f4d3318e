#include "xysel/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "xysel/rng.hpp"

namespace xysel {

ExtValue brute_force_kth(const SortedInput& x, const SortedInput& y, std::uint64_t k) {
  const std::uint64_t total =
      static_cast<std::uint64_t>(x.size()) * static_cast<std::uint64_t>(y.size());
  if (k < 1 || k > total) throw std::out_of_range("brute_force_kth: rank out of bounds");
  std::vector<double> sums;
  sums.reserve(total);
  for (double a : x.values())
    for (double b : y.values()) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  return ExtValue::finite(sums[k - 1]);
}

namespace {

std::vector<double> draw_values(Rng& rng, std::size_t len, double duplicate_bias) {
  std::vector<double> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0 && rng.uniform01() < duplicate_bias)
      v.push_back(v.back());
    else
      v.push_back(static_cast<double>(rng.uniform_int(-1000000, 1000000)));
  }
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Instance gen_instance(std::uint64_t seed, std::size_t max_len, double duplicate_bias) {
  if (max_len < 1) throw std::invalid_argument("gen_instance: max_len must be >= 1");
  if (duplicate_bias < 0.0 || duplicate_bias > 1.0)
    throw std::invalid_argument("gen_instance: duplicate_bias must be in [0, 1]");
  Rng rng(seed);
  const std::size_t m = rng.uniform(1, max_len);
  const std::size_t n = rng.uniform(1, max_len);
  auto [x, y] = SortedInput::make_pair(draw_values(rng, m, duplicate_bias),
                                       draw_values(rng, n, duplicate_bias));
  const std::uint64_t k =
      rng.uniform(1, static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n));
  return Instance{std::move(x), std::move(y), k, seed};
}

Instance make_square_instance(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  auto [x, y] = SortedInput::make_pair(draw_values(rng, n, 0.0), draw_values(rng, n, 0.0));
  const std::uint64_t total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return Instance{std::move(x), std::move(y), (total + 1) / 2, seed};
}

}  // namespace xysel
