#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agband/groupoid.hpp"

namespace agband {

enum class MappingKind { kIso, kAntiIso, kNeither, kUnverified };

std::string to_string(MappingKind kind);

struct Mapping {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Index> images;  // images[i] = target of source element i
  MappingKind kind = MappingKind::kUnverified;

  friend bool operator==(const Mapping&, const Mapping&) = default;
};

bool is_homomorphism(std::span<const Index> images, const FiniteGroupoid& src,
                     const FiniteGroupoid& dst);
bool is_anti_homomorphism(std::span<const Index> images,
                          const FiniteGroupoid& src, const FiniteGroupoid& dst);

// kIso when the bijection preserves products (also when it happens to reverse
// them, as for commutative groupoids), kAntiIso when it only reverses them,
// kNeither otherwise. Throws ArgumentError for a non-bijection or an order
// mismatch.
MappingKind classify_mapping(std::span<const Index> images,
                             const FiniteGroupoid& src,
                             const FiniteGroupoid& dst);

// Re-classifies and returns a copy carrying the verified kind.
Mapping verified(std::vector<Index> images, const FiniteGroupoid& src,
                 const FiniteGroupoid& dst);

// Cycle lengths in descending order, fixed points included.
std::vector<std::size_t> cycle_type(std::span<const Index> perm);
std::string describe_cycle_type(const std::vector<std::size_t>& type);

struct KindCounts {
  std::uint64_t iso = 0;
  std::uint64_t anti_iso = 0;
  std::uint64_t neither = 0;

  std::uint64_t total() const noexcept { return iso + anti_iso + neither; }
  friend bool operator==(const KindCounts&, const KindCounts&) = default;
};

struct BijectionCensus {
  KindCounts totals;
  std::map<std::vector<std::size_t>, KindCounts> by_cycle_type;
};

// Classifies all order! self-bijections. Throws ResourceError above order 8.
BijectionCensus classify_all_bijections(const FiniteGroupoid& g);

// Per-element invariant used to prune the isomorphism search:
// |{j : i*j = j}|.
std::vector<std::size_t> row_fixed_point_counts(const FiniteGroupoid& g);

struct IsoSearchStats {
  std::uint64_t nodes = 0;
};

// An isomorphism (or anti-isomorphism when `anti`) from src onto dst, the
// lexicographically least by image sequence, or nullopt.
std::optional<Mapping> iso_search(const FiniteGroupoid& src,
                                  const FiniteGroupoid& dst, bool anti = false,
                                  IsoSearchStats* stats = nullptr);

// g then f: x -> f(g(x)).
std::vector<Index> compose(std::span<const Index> f, std::span<const Index> g);

// Turns an anti-isomorphism src -> dst into an isomorphism src -> dst.
// Order 4 uses the swap recipe (c, d, cd, dc) -> (phi c, phi d, phi(dc),
// phi(cd)); other orders search. Throws ArgumentError if phi is not an
// anti-isomorphism, PreconditionError if src is not an ARAGB, and
// InvariantViolation if no isomorphism exists.
Mapping anti_to_iso(const Mapping& phi, const FiniteGroupoid& src,
                    const FiniteGroupoid& dst);

// Builds an isomorphism from k onto the top level of tower(n), |k| = 4^n,
// by adjoining elements of k in the order given by `enumeration`. The first
// two enumerated elements go to a and b; each later stage takes the
// earliest element not yet covered as the new generator.
Mapping canonical_iso(const FiniteGroupoid& k,
                      std::span<const Index> enumeration);

}  // namespace agband
