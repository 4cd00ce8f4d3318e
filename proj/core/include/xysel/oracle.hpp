#ifndef XYSEL_ORACLE_HPP
#define XYSEL_ORACLE_HPP

#include <cstdint>

#include "xysel/extended_value.hpp"
#include "xysel/sorted_input.hpp"

namespace xysel {

/// A generated selection problem.
struct Instance {
  SortedInput x;
  SortedInput y;
  std::uint64_t k;
  std::uint64_t seed;
};

/// Ground truth: materialize every X[i] + Y[j], sort, take position k-1.
/// Deliberately sort-based so it shares no code with the selection path
/// it judges.
ExtValue brute_force_kth(const SortedInput& x, const SortedInput& y, std::uint64_t k);

/// Deterministic in seed. Lengths uniform in [1, max_len]; integer
/// values drawn then sorted, each repeating its predecessor with
/// probability duplicate_bias; k uniform over the matrix.
Instance gen_instance(std::uint64_t seed, std::size_t max_len, double duplicate_bias);

/// Square m = n instance with k at the median, for benchmark sweeps.
Instance make_square_instance(std::size_t n, std::uint64_t seed);

}  // namespace xysel

#endif  // XYSEL_ORACLE_HPP
