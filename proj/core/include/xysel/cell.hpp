#ifndef XYSEL_CELL_HPP
#define XYSEL_CELL_HPP

#include <compare>
#include <cstdint>

#include "xysel/extended_value.hpp"
#include "xysel/tracked_buffer.hpp"

namespace xysel {

/// A square submatrix of A = X+Y, represented by the 8-tuple
/// (i1, j1, i2, j2, X[i1], X[i2-1], Y[j1], Y[j2-1]). Index ranges are
/// half-open: columns [i1, i2), rows [j1, j2). Caching the four corner
/// input values makes min/max O(1) with no array reads.
struct Cell {
  std::uint32_t i1 = 0;
  std::uint32_t j1 = 0;
  std::uint32_t i2 = 0;
  std::uint32_t j2 = 0;
  ExtValue x_lo;  // X[i1]
  ExtValue x_hi;  // X[i2-1]
  ExtValue y_lo;  // Y[j1]
  ExtValue y_hi;  // Y[j2-1]

  std::uint32_t side() const { return i2 - i1; }
};

template <>
struct WordWidth<Cell> {
  static constexpr std::uint32_t value = 8;
};

inline ExtValue cell_min(const Cell& c) { return c.x_lo + c.y_lo; }
inline ExtValue cell_max(const Cell& c) { return c.x_hi + c.y_hi; }

/// Lexicographic order on (i1, j1), i1 dominant. Within one cell list the
/// (i1, j1) pairs are unique, so equality means the same cell position.
inline std::strong_ordering lex_compare(const Cell& a, const Cell& b) {
  if (auto c = a.i1 <=> b.i1; c != 0) return c;
  return a.j1 <=> b.j1;
}

inline bool lex_less(const Cell& a, const Cell& b) { return lex_compare(a, b) < 0; }

using CellBuffer = TrackedBuffer<Cell>;

}  // namespace xysel

#endif  // XYSEL_CELL_HPP
