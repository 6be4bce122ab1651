#include "agband/groupoid.hpp"

#include <algorithm>
#include <unordered_set>

#include "agband/errors.hpp"

namespace agband {

std::vector<std::string> default_labels(std::size_t order) {
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    labels.push_back("e" + std::to_string(i));
  }
  return labels;
}

FiniteGroupoid::FiniteGroupoid(std::size_t order, std::vector<Index> cells,
                               std::vector<std::string> labels)
    : order_(order), cells_(std::move(cells)), labels_(std::move(labels)) {
  if (order_ == 0) {
    throw ArgumentError("groupoid order must be at least 1");
  }
  if (cells_.size() != order_ * order_) {
    throw ArgumentError("table has " + std::to_string(cells_.size()) +
                        " cells, expected " + std::to_string(order_ * order_));
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] >= order_) {
      throw ArgumentError("table entry at row " + std::to_string(k / order_) +
                          ", column " + std::to_string(k % order_) +
                          " is out of range: " + std::to_string(cells_[k]));
    }
  }
  if (labels_.empty()) {
    labels_ = default_labels(order_);
  }
  if (labels_.size() != order_) {
    throw ArgumentError("expected " + std::to_string(order_) + " labels, got " +
                        std::to_string(labels_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw ArgumentError("labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw ArgumentError("duplicate label '" + label + "'");
    }
  }
}

FiniteGroupoid FiniteGroupoid::from_rows(
    const std::vector<std::vector<Index>>& rows,
    std::vector<std::string> labels) {
  std::vector<Index> cells;
  cells.reserve(rows.size() * rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ArgumentError("row " + std::to_string(i) + " has " +
                          std::to_string(rows[i].size()) +
                          " entries, table is not square");
    }
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return FiniteGroupoid(rows.size(), std::move(cells), std::move(labels));
}

Index FiniteGroupoid::product(Index i, Index j) const {
  if (i >= order_ || j >= order_) {
    throw BoundsError("product(" + std::to_string(i) + ", " +
                      std::to_string(j) + ") outside order " +
                      std::to_string(order_));
  }
  return (*this)(i, j);
}

std::span<const Index> FiniteGroupoid::row(Index i) const {
  if (i >= order_) {
    throw BoundsError("row " + std::to_string(i) + " outside order " +
                      std::to_string(order_));
  }
  return std::span<const Index>(cells_).subspan(i * order_, order_);
}

const std::string& FiniteGroupoid::label(Index i) const {
  if (i >= order_) {
    throw BoundsError("label " + std::to_string(i) + " outside order " +
                      std::to_string(order_));
  }
  return labels_[i];
}

std::optional<Index> FiniteGroupoid::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

bool FiniteGroupoid::is_commutative() const noexcept {
  for (Index i = 0; i < order_; ++i) {
    for (Index j = i + 1; j < order_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

FiniteGroupoid trivial_groupoid() { return FiniteGroupoid(1, {0}); }

FiniteGroupoid opposite(const FiniteGroupoid& g) {
  const auto n = g.order();
  std::vector<Index> cells(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      cells[i * n + j] = g(j, i);
    }
  }
  return FiniteGroupoid(n, std::move(cells), g.labels());
}

FiniteGroupoid relabel(const FiniteGroupoid& g, std::span<const Index> perm) {
  const auto n = g.order();
  if (perm.size() != n) {
    throw ArgumentError("relabeling has length " + std::to_string(perm.size()) +
                        ", expected " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (Index p : perm) {
    if (p >= n || hit[p]) {
      throw ArgumentError("relabeling is not a permutation");
    }
    hit[p] = true;
  }
  std::vector<Index> cells(n * n);
  std::vector<std::string> labels(n);
  for (Index i = 0; i < n; ++i) {
    labels[perm[i]] = g.labels()[i];
    for (Index j = 0; j < n; ++j) {
      cells[perm[i] * n + perm[j]] = perm[g(i, j)];
    }
  }
  return FiniteGroupoid(n, std::move(cells), std::move(labels));
}

ElementSet generated_subgroupoid(const FiniteGroupoid& g,
                                 std::span<const Index> seeds) {
  if (seeds.empty()) {
    throw ArgumentError("generated_subgroupoid needs at least one seed");
  }
  const auto n = g.order();
  std::vector<bool> member(n, false);
  ElementSet members;
  for (Index s : seeds) {
    if (s >= n) {
      throw BoundsError("seed " + std::to_string(s) + " outside order " +
                        std::to_string(n));
    }
    if (!member[s]) {
      member[s] = true;
      members.push_back(s);
    }
  }
  // Worklist: every new element is multiplied against everything found so
  // far, on both sides.
  for (std::size_t next = 0; next < members.size(); ++next) {
    const Index u = members[next];
    for (std::size_t k = 0; k <= next; ++k) {
      const Index v = members[k];
      for (Index p : {g(u, v), g(v, u)}) {
        if (!member[p]) {
          member[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_closed(const FiniteGroupoid& g, std::span<const Index> subset) {
  std::vector<bool> member(g.order(), false);
  for (Index s : subset) member.at(s) = true;
  for (Index u : subset) {
    for (Index v : subset) {
      if (!member[g(u, v)]) return false;
    }
  }
  return true;
}

CancellativityReport is_cancellative(const FiniteGroupoid& g) {
  const auto n = g.order();
  CancellativityReport report;
  std::vector<Index> first_seen(n);
  std::vector<bool> seen(n);
  for (Index x = 0; x < n && report.left; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index a = 0; a < n; ++a) {
      const Index p = g(x, a);
      if (seen[p]) {
        report.left = false;
        report.left_witness = CancellationWitness{x, first_seen[p], a};
        break;
      }
      seen[p] = true;
      first_seen[p] = a;
    }
  }
  for (Index x = 0; x < n && report.right; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index a = 0; a < n; ++a) {
      const Index p = g(a, x);
      if (seen[p]) {
        report.right = false;
        report.right_witness = CancellationWitness{x, first_seen[p], a};
        break;
      }
      seen[p] = true;
      first_seen[p] = a;
    }
  }
  return report;
}

ClosureError::ClosureError(Index u, Index v, Index product)
    : std::runtime_error("subset is not closed: " + std::to_string(u) + " * " +
                         std::to_string(v) + " = " + std::to_string(product) +
                         " lies outside it"),
      u(u),
      v(v),
      product(product) {}

FiniteGroupoid restrict_to(const FiniteGroupoid& g,
                           std::span<const Index> subset) {
  if (subset.empty()) {
    throw ArgumentError("cannot restrict to an empty subset");
  }
  ElementSet members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto n = g.order();
  constexpr Index kAbsent = static_cast<Index>(-1);
  std::vector<Index> position(n, kAbsent);
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] >= n) {
      throw BoundsError("element " + std::to_string(members[k]) +
                        " outside order " + std::to_string(n));
    }
    position[members[k]] = static_cast<Index>(k);
  }
  const auto m = members.size();
  std::vector<Index> cells(m * m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.labels()[members[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      const Index p = g(members[i], members[j]);
      if (position[p] == kAbsent) {
        throw ClosureError(members[i], members[j], p);
      }
      cells[i * m + j] = position[p];
    }
  }
  return FiniteGroupoid(m, std::move(cells), std::move(labels));
}

}  // namespace agband
