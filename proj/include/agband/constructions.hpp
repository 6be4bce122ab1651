#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "agband/groupoid.hpp"

namespace agband {

// Blocks of an extension H^x, in storage order: H, xH, Hx, (ax)H.
enum class Block : std::uint8_t { kBase = 0, kXLeft = 1, kXRight = 2, kAX = 3 };

// Position of an element of the tower G_0 < G_1 < ... under prefix indexing.
// For level >= 1: index = ordinal(block) * 4^(level-1) + base_index.
struct TowerElement {
  unsigned level = 0;
  std::uint64_t index = 0;
  Block block = Block::kBase;
  std::uint64_t base_index = 0;
};

TowerElement locate(unsigned level, std::uint64_t index);

// The order-4 anti-rectangular AG-band with elements a, b, ab, ba.
FiniteGroupoid standard_g();

// The extension of `h` by a new element x. Output order is 4|h|, elements
// laid out as [H, xH, Hx, (ax)H] with each block in h's order; `a` is the
// designated element of an embedded copy of G. The element (ax)a equals x
// and is labeled `x_label`.
//
// Throws PreconditionError if h is not an ARAGB, ArgumentError if
// |h| < 4 or the label collides, BoundsError if `a` is out of range.
FiniteGroupoid extend(const FiniteGroupoid& h, Index a,
                      std::string_view x_label);

// Index of the adjoined x inside extend(h, a, ...).
inline Index adjoined_element(std::size_t base_order, Index a) {
  return static_cast<Index>(3 * base_order) + a;
}

// [G_0, ..., G_n]: G_0 trivial, G_1 = standard_g(), and
// G_k = extend(G_{k-1}, 0, "x{k-1}").
std::vector<FiniteGroupoid> tower(unsigned n);

// Product of i and j inside G_level (i, j < 4^level). Levels up to 4 read a
// cached table; higher levels apply the extension rule recursively.
std::uint64_t product_at_level(unsigned level, std::uint64_t i,
                               std::uint64_t j);

// Smallest level m >= 1 with 4^m > max(i, j).
unsigned limit_level(std::uint64_t i, std::uint64_t j);

// Product in the countable band that is the union of the tower.
std::uint64_t limit_product(std::uint64_t i, std::uint64_t j);

// The subgroupoid of G_{n+1} generated by a and the adjoined generators
// x_1..x_n. Order 4^n, a proper subgroupoid.
FiniteGroupoid j_subband(unsigned n);

struct GbarScaffold {
  // Copy of G on {a, x, ax, xa} (b of G renamed to x).
  FiniteGroupoid base_copy;
  // How the four copies G_a, G_b = (ab)G_a, G_ab = G_a b, G_ba = b G_a
  // multiply as sets.
  FiniteGroupoid block_table;
};

GbarScaffold gbar_scaffold();

// The 16-element AG-band that is an anti-rectangular band of four copies of
// G but is not itself anti-rectangular, computed from the per-block product
// formulas. Element order:
//   a, x, ax, xa, b, y, by, yb, ab, xy, (ab)(xy), (xy)(ab),
//   ba, yx, (ba)(yx), (yx)(ba).
FiniteGroupoid gbar_derived();

// The same groupoid as printed in the published 16x16 table, converted to
// 0-based indices. Kept verbatim, including its one corrupt cell.
FiniteGroupoid gbar_transcribed();

struct CellDiff {
  Index row;
  Index col;
  Index left;
  Index right;

  friend bool operator==(const CellDiff&, const CellDiff&) = default;
};

// Disagreeing cells in row-major order. Throws ArgumentError on an order
// mismatch.
std::vector<CellDiff> diff_tables(const FiniteGroupoid& a,
                                  const FiniteGroupoid& b);

}  // namespace agband
