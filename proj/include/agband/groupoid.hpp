#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace agband {

using Index = std::uint32_t;

// Sorted, duplicate-free set of element indices.
using ElementSet = std::vector<Index>;

// Non-owning row-major view of a Cayley table. Used by the hot loops
// (law checking, model search) that must not allocate per table.
struct TableView {
  std::size_t order = 0;
  std::span<const Index> cells;

  Index at(Index i, Index j) const noexcept { return cells[i * order + j]; }
};

// A finite magma given by its Cayley table: table[i][j] is the index of the
// product of element i (left factor) by element j. Immutable once built.
class FiniteGroupoid {
 public:
  // Validates that every cell is in [0, order) and labels are distinct and
  // non-empty. Empty `labels` means "e0".."e{n-1}".
  FiniteGroupoid(std::size_t order, std::vector<Index> cells,
                 std::vector<std::string> labels = {});

  static FiniteGroupoid from_rows(const std::vector<std::vector<Index>>& rows,
                                  std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }

  // Bounds-checked product; throws BoundsError.
  Index product(Index i, Index j) const;

  // Unchecked product for inner loops.
  Index operator()(Index i, Index j) const noexcept {
    return cells_[i * order_ + j];
  }

  std::span<const Index> row(Index i) const;
  std::span<const Index> cells() const noexcept { return cells_; }
  TableView view() const noexcept { return {order_, cells_}; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Index i) const;
  std::optional<Index> index_of(std::string_view label) const;

  bool same_table(const FiniteGroupoid& other) const noexcept {
    return order_ == other.order_ && cells_ == other.cells_;
  }
  bool is_commutative() const noexcept;

  friend bool operator==(const FiniteGroupoid&,
                         const FiniteGroupoid&) = default;

 private:
  std::size_t order_;
  std::vector<Index> cells_;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t order);

// The one-element groupoid.
FiniteGroupoid trivial_groupoid();

// Transposed table: x*y in the result is y*x in g.
FiniteGroupoid opposite(const FiniteGroupoid& g);

// Moves element i to position perm[i]. perm must be a permutation of
// [0, order).
FiniteGroupoid relabel(const FiniteGroupoid& g, std::span<const Index> perm);

// Least subset containing `seeds` and closed under the product.
ElementSet generated_subgroupoid(const FiniteGroupoid& g,
                                 std::span<const Index> seeds);

inline ElementSet generated_subgroupoid(const FiniteGroupoid& g,
                                        std::initializer_list<Index> seeds) {
  return generated_subgroupoid(g, std::span<const Index>(seeds.begin(),
                                                         seeds.size()));
}

bool is_closed(const FiniteGroupoid& g, std::span<const Index> subset);

struct CancellationWitness {
  Index x;
  Index a;
  Index b;  // a != b, and x*a == x*b (left) or a*x == b*x (right)
};

struct CancellativityReport {
  bool left = true;
  bool right = true;
  std::optional<CancellationWitness> left_witness;
  std::optional<CancellationWitness> right_witness;

  bool both() const noexcept { return left && right; }
};

CancellativityReport is_cancellative(const FiniteGroupoid& g);

// Thrown by restrict_to when the subset is not closed: u*v falls outside.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(Index u, Index v, Index product);
  Index u;
  Index v;
  Index product;
};

// The subgroupoid on `subset` (sorted and deduplicated first), re-indexed in
// ascending order of the original indices. Labels are carried over.
FiniteGroupoid restrict_to(const FiniteGroupoid& g,
                           std::span<const Index> subset);

inline FiniteGroupoid restrict_to(const FiniteGroupoid& g,
                                  std::initializer_list<Index> subset) {
  return restrict_to(g, std::span<const Index>(subset.begin(), subset.size()));
}

}  // namespace agband
