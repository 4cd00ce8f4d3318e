#ifndef XYSEL_FJ_HPP
#define XYSEL_FJ_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "xysel/cell.hpp"
#include "xysel/padded_array.hpp"
#include "xysel/permute.hpp"
#include "xysel/sorted_input.hpp"

namespace xysel {

struct FjOptions {
  /// Validate lex order and the staircase structure after every split
  /// and discard (costs a pass per step; off on benchmark runs).
  bool check_invariants = false;
};

/// One row of driver diagnostics per iteration p.
struct IterationRow {
  std::uint32_t p = 0;
  std::size_t cells_in = 0;     // active cells entering the iteration
  std::size_t cells_split = 0;  // after splitting into four
  std::uint64_t l_p = 0;        // min(N, 2^(p+1) - 1)
  std::uint64_t q = 0;          // upper-discard threshold
  bool upper_applied = false;
  std::uint64_t r = 0;          // cells removed by the lower discard
  std::uint64_t k_after = 0;    // remaining rank after the iteration
  std::size_t cells_out = 0;    // survivors handed to the next iteration
};

struct SelectRun {
  ExtValue value;
  std::vector<IterationRow> iterations;
};

/// Splits every cell into its four half-side subcells, keeping the list
/// in lexicographic order. The west children (low column half) and east
/// children (high column half) are staged into two lists, each sorted by
/// construction, and merged. New corner values come from the permuted
/// views through beta1/beta2, never from the original arrays; when cells
/// have side two the parent tuple already holds all four mid values and
/// nothing is fetched at all.
CellBuffer partition_cells(const CellBuffer& cells, const PermutedViews& views,
                           std::uint32_t p, IoSession* session = nullptr);

/// Same split, fetching mid values straight from the input arrays. This
/// is the baseline the permuted views exist to replace.
CellBuffer partition_cells_direct(const CellBuffer& cells, const PaddedArray& x,
                                  const PaddedArray& y, std::uint32_t p,
                                  IoSession* session = nullptr);

/// Step (b): keep exactly q = ceil(k * 4^p / N^2) + L_p cells -- those
/// with the smallest minima, ties resolved toward the lexicographically
/// smallest -- or everything when q exceeds the list. The discarded set
/// is closed toward the south-east.
CellBuffer discard_upper(CellBuffer cells, std::uint64_t k, std::uint32_t p,
                         std::size_t n_padded, IoSession* session = nullptr);

/// Step (c): drop exactly r = ceil(k * 4^p / N^2) - L_p cells with the
/// smallest maxima (lexicographically smallest ties first, closing the
/// discarded set toward the north-west), or nothing when r < 1. Returns
/// the survivors and the count actually dropped.
std::pair<CellBuffer, std::uint64_t> discard_lower(CellBuffer cells, std::uint64_t k,
                                                   std::uint32_t p, std::size_t n_padded,
                                                   IoSession* session = nullptr);

/// Step (d): k minus the r * (N/2^p)^2 elements dropped below the target.
std::uint64_t update_rank(std::uint64_t k, std::uint64_t r, std::uint32_t p,
                          std::size_t n_padded);

/// Validates strict lex order plus the staircase structure: cells of one
/// column are a contiguous run of rows, and the bottom rows of occupied
/// columns never increase from left to right. Throws std::logic_error.
void check_cell_list(const CellBuffer& cells);

/// The kth smallest element of {X[i] + Y[j]}, k 1-based over the real
/// m*n matrix. Scan-friendly variant: cell splitting reads the permuted
/// views built in a preprocessing pass.
ExtValue fj_select(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                   IoSession* session = nullptr);
SelectRun fj_select_run(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                        IoSession* session = nullptr, const FjOptions& options = {});

/// Identical contract and identical cell machinery, but cell splitting
/// fetches mid values directly from X and Y (no permuted views).
ExtValue naive_fj_select(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                         IoSession* session = nullptr);
SelectRun naive_fj_select_run(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                              IoSession* session = nullptr, const FjOptions& options = {});

}  // namespace xysel

#endif  // XYSEL_FJ_HPP
