#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "agband/groupoid.hpp"
#include "agband/law.hpp"

namespace agband {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagation_failures = 0;
  std::uint64_t labeled_models = 0;  // leaves reached before deduplication
  double wall_seconds = 0.0;
};

struct SearchOutcome {
  std::size_t order = 0;
  std::string variety;
  // Canonical (lexicographically least) tables, sorted.
  std::vector<FiniteGroupoid> canonical_models;
  std::size_t count = 0;
  // False when the search stopped at the requested limit.
  bool complete = true;
  SearchStats stats;
};

struct SearchOptions {
  // Stop after this many isomorphism classes ("witness mode").
  std::optional<std::size_t> limit;
  // 0 picks the default: hardware concurrency capped by AGBAND_THREADS.
  unsigned threads = 0;
};

// Worker count honoring the AGBAND_THREADS cap.
unsigned default_worker_count();

// All models of `v` of the given order up to isomorphism. Full enumeration
// is supported up to order 8 for varieties containing (xy)x = y and up to
// order 5 otherwise; larger orders (<= 16) need a limit. Outside that
// envelope throws ResourceError.
SearchOutcome enumerate_models(std::size_t order, const VarietySpec& v,
                               const SearchOptions& options = {});

// (order, number of isomorphism classes) for orders 1..max_order.
std::vector<std::pair<std::size_t, std::size_t>> spectrum_scan(
    const VarietySpec& v, std::size_t max_order);

// Counts isomorphism classes by sweeping every table. Order <= 3, or
// order 4 when the variety contains x = xx (diagonal fixed).
std::size_t brute_force_oracle(std::size_t order, const VarietySpec& v);

struct CanonicalForm {
  // perm[i] is the new index of element i.
  std::vector<Index> perm;
  FiniteGroupoid table;
};

// Lexicographically least relabeling, trying all order! permutations.
// Throws ResourceError above order 9.
CanonicalForm canonical_form_exhaustive(const FiniteGroupoid& g);

// Same result via branch and bound over the first row; fast for quasigroups
// of moderate order.
CanonicalForm canonical_form_pruned(const FiniteGroupoid& g);

// Exhaustive up to order 8, pruned above.
CanonicalForm canonical_form(const FiniteGroupoid& g);

}  // namespace agband
