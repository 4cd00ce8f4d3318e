#include "xysel/fj.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

#include "xysel/select.hpp"

namespace xysel {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::uint64_t l_p(std::uint32_t p, std::size_t n_padded) {
  const std::uint64_t cap = (std::uint64_t{1} << (p + 1)) - 1;
  return cap < n_padded ? cap : n_padded;
}

/// (N / 2^p)^2: the element count of one cell after the pth split. Equal
/// to N^2 / 4^p, so ceil(k * 4^p / N^2) == ceil_div(k, cell_area) without
/// ever forming the 4^p * k product.
std::uint64_t cell_area(std::uint32_t p, std::size_t n_padded) {
  const std::uint64_t side = static_cast<std::uint64_t>(n_padded) >> p;
  return side * side;
}

struct MidValues {
  ExtValue x_mid_hi;  // X[i_m - 1]
  ExtValue x_mid_lo;  // X[i_m]
  ExtValue y_mid_hi;  // Y[j_m - 1]
  ExtValue y_mid_lo;  // Y[j_m]
};

template <class FetchFn>
CellBuffer partition_impl(const CellBuffer& cells, std::uint32_t p, std::size_t n_padded,
                          IoSession* session, FetchFn&& fetch) {
  const std::uint64_t parent_side = static_cast<std::uint64_t>(n_padded) >> (p - 1);
  if (p < 1 || parent_side < 2)
    throw std::invalid_argument("partition_cells: cells of side 1 cannot be split");

  CellBuffer west(session, "cells.west");
  CellBuffer east(session, "cells.east");
  west.reserve(2 * cells.size());
  east.reserve(2 * cells.size());

  for (std::size_t n = 0; n < cells.size(); ++n) {
    const Cell c = cells.get(n);
    assert(c.side() == parent_side);
    const std::uint32_t im = (c.i1 + c.i2) / 2;
    const std::uint32_t jm = (c.j1 + c.j2) / 2;
    MidValues mid;
    if (parent_side == 2) {
      // i_m - 1 == i1 and i_m == i2 - 1, so the parent tuple already
      // carries every value the children need.
      mid = MidValues{c.x_lo, c.x_hi, c.y_lo, c.y_hi};
    } else {
      mid = fetch(im, jm);
    }
    west.push_back(Cell{c.i1, c.j1, im, jm, c.x_lo, mid.x_mid_hi, c.y_lo, mid.y_mid_hi});
    west.push_back(Cell{c.i1, jm, im, c.j2, c.x_lo, mid.x_mid_hi, mid.y_mid_lo, c.y_hi});
    east.push_back(Cell{im, c.j1, c.i2, jm, mid.x_mid_lo, c.x_hi, c.y_lo, mid.y_mid_hi});
    east.push_back(Cell{im, jm, c.i2, c.j2, mid.x_mid_lo, c.x_hi, mid.y_mid_lo, c.y_hi});
  }

  // Both staging lists are lex-sorted by construction (parents are
  // sorted and column-contiguous), so one two-way merge suffices.
  CellBuffer out(session, "cells.split");
  out.reserve(west.size() + east.size());
  std::size_t wi = 0, ei = 0;
  while (wi < west.size() && ei < east.size()) {
    const Cell w = west.get(wi);
    const Cell e = east.get(ei);
    if (lex_less(w, e)) {
      out.push_back(w);
      ++wi;
    } else {
      out.push_back(e);
      ++ei;
    }
  }
  for (; wi < west.size(); ++wi) out.push_back(west.get(wi));
  for (; ei < east.size(); ++ei) out.push_back(east.get(ei));
  return out;
}

}  // namespace

CellBuffer partition_cells(const CellBuffer& cells, const PermutedViews& views,
                           std::uint32_t p, IoSession* session) {
  return partition_impl(cells, p, views.n_padded, session, [&](std::uint32_t im, std::uint32_t jm) {
    return MidValues{
        views.x2.get(beta2(im - 1, p, views.n_padded)),
        views.x1.get(beta1(im, p, views.n_padded)),
        views.y2.get(beta2(jm - 1, p, views.n_padded)),
        views.y1.get(beta1(jm, p, views.n_padded)),
    };
  });
}

CellBuffer partition_cells_direct(const CellBuffer& cells, const PaddedArray& x,
                                  const PaddedArray& y, std::uint32_t p, IoSession* session) {
  if (x.padded_len() != y.padded_len())
    throw std::invalid_argument("partition_cells_direct: padded lengths differ");
  return partition_impl(cells, p, x.padded_len(), session, [&](std::uint32_t im, std::uint32_t jm) {
    return MidValues{x.at(im - 1), x.at(im), y.at(jm - 1), y.at(jm)};
  });
}

CellBuffer discard_upper(CellBuffer cells, std::uint64_t k, std::uint32_t p,
                         std::size_t n_padded, IoSession* session) {
  const std::uint64_t q = ceil_div(k, cell_area(p, n_padded)) + l_p(p, n_padded);
  if (q > cells.size()) return cells;

  KeyedBuffer minima(session, "discard.minima");
  minima.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    minima.push_back(KeyedItem{cell_min(cells.get(i)), i});
  const ExtValue x_u = select_kth(minima, q, session);

  std::uint64_t strictly_below = 0;
  for (std::size_t i = 0; i < minima.size(); ++i)
    if (minima.get(i).key < x_u) ++strictly_below;

  // Keep every cell below the threshold, then the lexicographically
  // first ties until exactly q remain; everything discarded lies to the
  // south-east of a kept frontier.
  std::uint64_t ties_to_keep = q - strictly_below;
  CellBuffer kept(session, "cells.kept");
  kept.reserve(q);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells.get(i);
    const ExtValue m = cell_min(c);
    if (m < x_u) {
      kept.push_back(c);
    } else if (m == x_u && ties_to_keep > 0) {
      kept.push_back(c);
      --ties_to_keep;
    }
  }
  assert(kept.size() == q);
  return kept;
}

std::pair<CellBuffer, std::uint64_t> discard_lower(CellBuffer cells, std::uint64_t k,
                                                   std::uint32_t p, std::size_t n_padded,
                                                   IoSession* session) {
  const std::uint64_t base = ceil_div(k, cell_area(p, n_padded));
  const std::uint64_t lp = l_p(p, n_padded);
  if (base <= lp) return {std::move(cells), 0};
  const std::uint64_t r = base - lp;
  if (r > cells.size())
    throw std::logic_error("discard_lower: r exceeds the active cell count");

  KeyedBuffer maxima(session, "discard.maxima");
  maxima.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    maxima.push_back(KeyedItem{cell_max(cells.get(i)), i});
  const ExtValue x_l = select_kth(maxima, r, session);

  std::uint64_t strictly_below = 0;
  for (std::size_t i = 0; i < maxima.size(); ++i)
    if (maxima.get(i).key < x_l) ++strictly_below;

  // Drop the below-threshold cells plus the lexicographically first
  // ties, closing the discarded set toward the north-west.
  std::uint64_t ties_to_drop = r - strictly_below;
  CellBuffer kept(session, "cells.kept");
  kept.reserve(cells.size() - r);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells.get(i);
    const ExtValue m = cell_max(c);
    if (m < x_l) continue;
    if (m == x_l && ties_to_drop > 0) {
      --ties_to_drop;
      continue;
    }
    kept.push_back(c);
  }
  assert(kept.size() == cells.size() - r);
  return {std::move(kept), r};
}

std::uint64_t update_rank(std::uint64_t k, std::uint64_t r, std::uint32_t p,
                          std::size_t n_padded) {
  const std::uint64_t area = cell_area(p, n_padded);
  const std::uint64_t removed = r * area;
  if ((r != 0 && removed / r != area) || removed >= k)
    throw std::logic_error("update_rank: discarded cells covered the requested rank");
  return k - removed;
}

void check_cell_list(const CellBuffer& cells) {
  const auto& v = cells.raw();
  if (v.empty()) return;
  const std::uint32_t side = v.front().side();
  std::uint32_t prev_col_bottom = 0;
  bool have_prev_col = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Cell& c = v[i];
    if (c.side() != side || c.j2 - c.j1 != side || !std::has_single_bit(side))
      throw std::logic_error("cell list: cells must be square, equal, power-of-two sized");
    if (i == 0) continue;
    const Cell& prev = v[i - 1];
    if (lex_compare(prev, c) >= 0) throw std::logic_error("cell list: not strictly lex-sorted");
    if (c.i1 == prev.i1) {
      if (c.j1 != prev.j1 + side)
        throw std::logic_error("cell list: column rows not contiguous");
    } else {
      // Column ended: its bottom row may not lie above the bottom of the
      // column to its left.
      if (have_prev_col && prev.j1 > prev_col_bottom)
        throw std::logic_error("cell list: column bottoms increase left to right");
      prev_col_bottom = prev.j1;
      have_prev_col = true;
    }
  }
  const Cell& last = v.back();
  if (have_prev_col && last.j1 > prev_col_bottom)
    throw std::logic_error("cell list: column bottoms increase left to right");
}

namespace {

SelectRun run_select(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                     IoSession* session, const FjOptions& options, bool use_views) {
  const std::uint64_t real_elements =
      static_cast<std::uint64_t>(x.size()) * static_cast<std::uint64_t>(y.size());
  if (k < 1 || k > real_elements) throw std::out_of_range("fj_select: rank out of bounds");
  if (x.padded_len() != y.padded_len())
    throw std::invalid_argument("fj_select: inputs must share their padded length");
  const std::size_t n = x.padded_len();
  const std::uint32_t levels = static_cast<std::uint32_t>(std::countr_zero(n));

  PaddedArray px(session, "input.x", x);
  PaddedArray py(session, "input.y", y);
  PermutedViews views;
  if (use_views) views = build_views(px, py, session);

  SelectRun run;
  run.iterations.reserve(levels);

  CellBuffer cells(session, "cells.initial");
  cells.push_back(Cell{0, 0, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n),
                       px.at(0), px.at(n - 1), py.at(0), py.at(n - 1)});

  for (std::uint32_t p = 1; p <= levels; ++p) {
    IterationRow row;
    row.p = p;
    row.cells_in = cells.size();
    row.l_p = l_p(p, n);
    row.q = ceil_div(k, cell_area(p, n)) + row.l_p;

    CellBuffer split = use_views ? partition_cells(cells, views, p, session)
                                 : partition_cells_direct(cells, px, py, p, session);
    cells = CellBuffer();  // free the parents before the discards
    row.cells_split = split.size();
    if (options.check_invariants) check_cell_list(split);

    row.upper_applied = row.q <= split.size();
    split = discard_upper(std::move(split), k, p, n, session);
    if (options.check_invariants) check_cell_list(split);

    auto [survivors, r] = discard_lower(std::move(split), k, p, n, session);
    row.r = r;
    if (r > 0) k = update_rank(k, r, p, n);
    if (options.check_invariants) check_cell_list(survivors);

    row.k_after = k;
    row.cells_out = survivors.size();
    assert(row.cells_out <= 2 * row.l_p);
    run.iterations.push_back(row);
    cells = std::move(survivors);
  }

  // The survivors are single elements now; classical selection finishes.
  KeyedBuffer finals(session, "final.keys");
  finals.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    finals.push_back(KeyedItem{cell_min(cells.get(i)), i});
  run.value = select_kth(finals, k, session);
  return run;
}

}  // namespace

ExtValue fj_select(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                   IoSession* session) {
  return run_select(x, y, k, session, {}, true).value;
}

SelectRun fj_select_run(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                        IoSession* session, const FjOptions& options) {
  return run_select(x, y, k, session, options, true);
}

ExtValue naive_fj_select(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                         IoSession* session) {
  return run_select(x, y, k, session, {}, false).value;
}

SelectRun naive_fj_select_run(const SortedInput& x, const SortedInput& y, std::uint64_t k,
                              IoSession* session, const FjOptions& options) {
  return run_select(x, y, k, session, options, false);
}

}  // namespace xysel
