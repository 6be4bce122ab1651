#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "agband/groupoid.hpp"

namespace agband {

// Disjoint nonempty blocks covering [0, order). Blocks keep the order they
// were given in; each block is stored sorted.
class Partition {
 public:
  // Throws ArgumentError unless the blocks partition [0, order).
  Partition(std::size_t order, std::vector<ElementSet> blocks);

  static Partition singletons(std::size_t order);
  // Consecutive runs of `block_size` indices.
  static Partition contiguous(std::size_t order, std::size_t block_size);

  std::size_t order() const noexcept { return block_of_.size(); }
  std::size_t size() const noexcept { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }
  Index block_of(Index element) const { return block_of_.at(element); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<ElementSet> blocks_;
  std::vector<Index> block_of_;
};

struct BandDecomposition {
  Partition partition;
  // Element alpha is block alpha, labeled "B<alpha>".
  FiniteGroupoid quotient;
};

// u, u2 in one block and v, v2 in one block, yet u*v and u2*v2 land in
// different blocks.
struct BlockWitness {
  Index u;
  Index v;
  Index u2;
  Index v2;
};

struct BandCheck {
  std::optional<BandDecomposition> decomposition;
  std::optional<BlockWitness> witness;

  bool ok() const noexcept { return decomposition.has_value(); }
};

// Throws ArgumentError if the partition is for a different order.
BandCheck check_band_decomposition(const FiniteGroupoid& g, const Partition& p);

// The four extension blocks of G_n (n >= 2) or the singletons of G_1, with
// every block checked isomorphic to G_{n-1} and the quotient to G.
BandDecomposition extension_block_decomposition(unsigned n);

// Partition of an ARAGB of order 4^n into closed copies of G, chosen by
// least-index greedy selection with chronological backtracking.
Partition g_copy_partition(const FiniteGroupoid& g);

struct CopyAudit {
  // Distinct subgroupoids generated by two distinct elements.
  std::vector<ElementSet> copies;
  // Number of unordered pairs of distinct copies per intersection size.
  std::map<std::size_t, std::uint64_t> intersection_sizes;
  // Every pair, copies included, intersects in 0, 1 or 4 elements.
  bool trichotomy_holds = true;
};

// Throws ResourceError above order 64.
CopyAudit copy_intersection_audit(const FiniteGroupoid& g);

}  // namespace agband
