#include "agband/model_search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "agband/errors.hpp"

namespace agband {

unsigned default_worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("AGBAND_THREADS")) {
    try {
      const long value = std::stol(cap);
      if (value >= 1) workers = std::min<unsigned>(workers, value);
    } catch (const std::exception&) {
      // Ignore malformed caps.
    }
  }
  return workers;
}

// ---------------------------------------------------------------- canonical

CanonicalForm canonical_form_exhaustive(const FiniteGroupoid& g) {
  const auto n = g.order();
  if (n > 9) {
    throw ResourceError("exhaustive canonical form supports order <= 9");
  }
  // inverse[a] is the old element placed at new index a.
  std::vector<Index> inverse(n);
  std::iota(inverse.begin(), inverse.end(), 0);
  std::vector<Index> perm(n);
  std::vector<Index> best(g.cells().begin(), g.cells().end());
  std::vector<Index> best_inverse = inverse;
  do {
    for (Index a = 0; a < n; ++a) perm[inverse[a]] = a;
    // Compare lazily; most relabelings lose within a few cells.
    bool smaller = false;
    std::size_t cell = 0;
    for (; cell < n * n; ++cell) {
      const Index value = perm[g(inverse[cell / n], inverse[cell % n])];
      if (value != best[cell]) {
        smaller = value < best[cell];
        break;
      }
    }
    if (!smaller) continue;
    for (; cell < n * n; ++cell) {
      best[cell] = perm[g(inverse[cell / n], inverse[cell % n])];
    }
    best_inverse = inverse;
  } while (std::next_permutation(inverse.begin(), inverse.end()));
  std::vector<Index> best_perm(n);
  for (Index a = 0; a < n; ++a) best_perm[best_inverse[a]] = a;
  return CanonicalForm{best_perm, FiniteGroupoid(n, std::move(best))};
}

namespace {

// Branch and bound for the least relabeled table. Once the first row is
// fixed every label is assigned, so only first-row choices branch: which
// element receives the next label when a column needs one, restricted to
// the choices that make the current cell as small as possible.
class PrunedCanonicalizer {
 public:
  explicit PrunedCanonicalizer(const FiniteGroupoid& g)
      : g_(g), n_(g.order()), label_(n_, kNone), element_(n_, kNone) {}

  CanonicalForm run() {
    for (Index first = 0; first < n_; ++first) {
      label_[first] = 0;
      element_[0] = first;
      next_label_ = 1;
      tight_ = have_best_;
      row_.assign(n_, kNone);
      descend(0);
      label_[first] = kNone;
      element_[0] = kNone;
    }
    std::vector<Index> perm(n_);
    for (Index a = 0; a < n_; ++a) perm[best_element_[a]] = a;
    return CanonicalForm{perm, FiniteGroupoid(n_, best_)};
  }

 private:
  static constexpr Index kNone = static_cast<Index>(-1);

  // Value of cell (0, column) if `candidate` got label `column`, without
  // committing anything.
  Index preview(Index column, Index candidate) const {
    const Index product = g_(element_[0], candidate);
    if (label_[product] != kNone) return label_[product];
    if (product == candidate) return column;
    return column + 1;
  }

  void descend(Index column) {
    if (column == n_) {
      finish();
      return;
    }
    if (element_[column] != kNone) {
      const Index product = g_(element_[0], element_[column]);
      bool fresh = false;
      if (label_[product] == kNone) {
        label_[product] = next_label_;
        element_[next_label_++] = product;
        fresh = true;
      }
      place(column, label_[product]);
      if (fresh) {
        element_[--next_label_] = kNone;
        label_[product] = kNone;
      }
      return;
    }
    // Column needs a new element; next_label_ == column here.
    Index least = kNone;
    for (Index e = 0; e < n_; ++e) {
      if (label_[e] == kNone) least = std::min(least, preview(column, e));
    }
    for (Index e = 0; e < n_; ++e) {
      if (label_[e] != kNone || preview(column, e) != least) continue;
      label_[e] = next_label_;
      element_[next_label_++] = e;
      const Index product = g_(element_[0], e);
      bool fresh = false;
      if (label_[product] == kNone) {
        label_[product] = next_label_;
        element_[next_label_++] = product;
        fresh = true;
      }
      place(column, least);
      if (fresh) {
        element_[--next_label_] = kNone;
        label_[product] = kNone;
      }
      element_[--next_label_] = kNone;
      label_[e] = kNone;
    }
  }

  // Records cell (0, column) and continues unless it already loses.
  void place(Index column, Index value) {
    const bool was_tight = tight_;
    if (tight_) {
      if (value > best_[column]) return;
      if (value < best_[column]) tight_ = false;
    }
    row_[column] = value;
    descend(column + 1);
    tight_ = was_tight;
  }

  void finish() {
    std::vector<Index> cells(n_ * n_);
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        cells[a * n_ + b] = label_[g_(element_[a], element_[b])];
      }
    }
    if (!have_best_ || cells < best_) {
      best_ = std::move(cells);
      best_element_ = element_;
      have_best_ = true;
    }
  }

  const FiniteGroupoid& g_;
  std::size_t n_;
  std::vector<Index> label_;    // element -> label
  std::vector<Index> element_;  // label -> element
  Index next_label_ = 0;
  std::vector<Index> row_;
  bool tight_ = false;  // current prefix equals best_'s prefix
  bool have_best_ = false;
  std::vector<Index> best_;
  std::vector<Index> best_element_;
};

}  // namespace

CanonicalForm canonical_form_pruned(const FiniteGroupoid& g) {
  return PrunedCanonicalizer(g).run();
}

CanonicalForm canonical_form(const FiniteGroupoid& g) {
  return g.order() <= 8 ? canonical_form_exhaustive(g) : canonical_form_pruned(g);
}

// ---------------------------------------------------------------- search

namespace {

constexpr Index kUnknown = static_cast<Index>(-1);
constexpr int kMultiply = -1;

void compile_term(const Term& t, const std::vector<char>& vars,
                  std::vector<int>& out) {
  if (t.is_variable()) {
    out.push_back(static_cast<int>(
        std::find(vars.begin(), vars.end(), t.name()) - vars.begin()));
    return;
  }
  compile_term(t.left(), vars, out);
  compile_term(t.right(), vars, out);
  out.push_back(kMultiply);
}

struct Law {
  std::vector<int> lhs;
  std::vector<int> rhs;
  std::size_t arity;
};

struct GroundInstance {
  std::uint32_t law;
  std::uint32_t offset;  // into the flat assignment store
};

// Result of evaluating one side over a partial table: either a value, or
// unknown. When unknown only because the outermost product's cell is empty
// (both factors known), `cell` names that cell so it can be forced.
struct PartialValue {
  Index value = kUnknown;
  int cell = -1;
};

class TableSearch {
 public:
  TableSearch(std::size_t order, const VarietySpec& variety,
              std::optional<std::size_t> limit)
      : n_(order),
        variety_(variety),
        cancellative_(forces_cancellation(variety)),
        break_symmetry_(order <= 8),
        limit_(limit),
        cells_(order * order, kUnknown),
        row_used_(order, 0),
        col_used_(order, 0) {
    for (const auto& id : variety.identities) {
      Law law;
      compile_term(id.lhs, id.variables, law.lhs);
      compile_term(id.rhs, id.variables, law.rhs);
      law.arity = id.variables.size();
      const auto law_index = static_cast<std::uint32_t>(laws_.size());
      laws_.push_back(std::move(law));
      std::vector<Index> values(laws_.back().arity, 0);
      for (;;) {
        instances_.push_back(
            {law_index, static_cast<std::uint32_t>(assignments_.size())});
        assignments_.insert(assignments_.end(), values.begin(), values.end());
        std::size_t k = values.size();
        while (k > 0 && ++values[k - 1] == n_) values[--k] = 0;
        if (k == 0) break;
      }
    }
    settled_.assign(instances_.size(), false);
  }

  // Initial propagation (the diagonal for idempotent laws, and so on).
  bool prepare() {
    const bool ok = propagate();
    if (!ok) ++stats_.propagation_failures;
    return ok;
  }

  int first_open_cell() const {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (cells_[c] == kUnknown) return static_cast<int>(c);
    }
    return -1;
  }

  std::vector<Index> candidates(int cell) const {
    std::vector<Index> values;
    for (Index v = 0; v < n_; ++v) {
      if (allowed(cell, v)) values.push_back(v);
    }
    return values;
  }

  // Explores the subtree rooted at setting `cell` to `value`.
  void branch(int cell, Index value) {
    if (stopped()) return;
    const auto mark = trail_.size();
    const auto settled_mark = settled_trail_.size();
    if (assign(cell, value) && propagate()) {
      descend();
    } else {
      ++stats_.propagation_failures;
    }
    undo(mark, settled_mark);
  }

  void descend() {
    ++stats_.nodes;
    if (stopped()) return;
    const int cell = first_open_cell();
    if (cell < 0) {
      record_model();
      return;
    }
    for (Index v = 0; v < n_ && !stopped(); ++v) {
      if (allowed(cell, v)) branch(cell, v);
    }
  }

  const std::set<std::vector<Index>>& models() const { return models_; }
  SearchStats& stats() { return stats_; }
  bool hit_limit() const { return stopped(); }

 private:
  bool stopped() const { return limit_ && models_.size() >= *limit_; }

  bool allowed(int cell, Index v) const {
    if (!cancellative_) return true;
    const auto bit = std::uint32_t{1} << v;
    return !(row_used_[cell / n_] & bit) && !(col_used_[cell % n_] & bit);
  }

  bool assign(int cell, Index v) {
    if (cells_[cell] != kUnknown) return cells_[cell] == v;
    if (!allowed(cell, v)) return false;
    cells_[cell] = v;
    if (cancellative_) {
      row_used_[cell / n_] |= std::uint32_t{1} << v;
      col_used_[cell % n_] |= std::uint32_t{1} << v;
    }
    trail_.push_back(cell);
    return true;
  }

  void undo(std::size_t mark, std::size_t settled_mark) {
    while (trail_.size() > mark) {
      const int cell = trail_.back();
      trail_.pop_back();
      if (cancellative_) {
        const auto bit = std::uint32_t{1} << cells_[cell];
        row_used_[cell / n_] &= ~bit;
        col_used_[cell % n_] &= ~bit;
      }
      cells_[cell] = kUnknown;
    }
    while (settled_trail_.size() > settled_mark) {
      settled_[settled_trail_.back()] = false;
      settled_trail_.pop_back();
    }
    if (row0_checked_ && trail_.size() < row0_checked_at_) row0_checked_ = false;
  }

  PartialValue evaluate(const std::vector<int>& program,
                        const Index* values) const {
    Index stack[64];
    std::size_t top = 0;
    int open_cell = -1;
    for (int op : program) {
      if (op != kMultiply) {
        stack[top++] = values[op];
        open_cell = -1;
        continue;
      }
      const Index r = stack[--top];
      const Index l = stack[--top];
      open_cell = -1;
      if (l == kUnknown || r == kUnknown) {
        stack[top++] = kUnknown;
      } else {
        const int cell = static_cast<int>(l * n_ + r);
        stack[top++] = cells_[cell];
        if (cells_[cell] == kUnknown) open_cell = cell;
      }
    }
    return PartialValue{stack[0], stack[0] == kUnknown ? open_cell : -1};
  }

  // Fixed point of: every ground instance whose two sides are known must
  // agree, and an instance with one side known and the other blocked only
  // on its outermost cell forces that cell. Cancellative varieties also get
  // Latin-square pruning (empty domains fail, single values are forced).
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < instances_.size(); ++k) {
        if (settled_[k]) continue;
        const auto& inst = instances_[k];
        const auto& law = laws_[inst.law];
        const Index* values = assignments_.data() + inst.offset;
        const auto lhs = evaluate(law.lhs, values);
        const auto rhs = evaluate(law.rhs, values);
        if (lhs.value != kUnknown && rhs.value != kUnknown) {
          if (lhs.value != rhs.value) return false;
          settled_[k] = true;
          settled_trail_.push_back(k);
        } else if (lhs.value != kUnknown && rhs.cell >= 0) {
          if (!assign(rhs.cell, lhs.value)) return false;
          changed = true;
        } else if (rhs.value != kUnknown && lhs.cell >= 0) {
          if (!assign(lhs.cell, rhs.value)) return false;
          changed = true;
        }
      }
      if (cancellative_) {
        const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
        for (std::size_t c = 0; c < cells_.size(); ++c) {
          if (cells_[c] != kUnknown) continue;
          const std::uint32_t open = full & ~row_used_[c / n_] & ~col_used_[c % n_];
          if (open == 0) return false;
          if ((open & (open - 1)) == 0) {
            assign(static_cast<int>(c), static_cast<Index>(__builtin_ctz(open)));
            changed = true;
          }
        }
      }
    }
    return !break_symmetry_ || first_row_is_minimal();
  }

  // Any model can be relabeled, fixing element 0, so that its first row is
  // least among all relabelings fixing 0; only such tables are explored.
  bool first_row_is_minimal() {
    if (row0_checked_) return true;
    for (Index j = 0; j < n_; ++j) {
      if (cells_[j] == kUnknown) return true;
    }
    std::vector<Index> inverse(n_);
    std::iota(inverse.begin(), inverse.end(), 0);
    std::vector<Index> perm(n_);
    do {
      for (Index a = 0; a < n_; ++a) perm[inverse[a]] = a;
      for (Index j = 0; j < n_; ++j) {
        const Index value = perm[cells_[inverse[j]]];
        if (value < cells_[j]) return false;
        if (value > cells_[j]) break;
      }
    } while (std::next_permutation(inverse.begin() + 1, inverse.end()));
    row0_checked_ = true;
    row0_checked_at_ = trail_.size();
    return true;
  }

  void record_model() {
    ++stats_.labeled_models;
    FiniteGroupoid model(n_, cells_);
    for (const auto& id : variety_.identities) {
      if (!check_identity(model, id).holds) {
        throw InvariantViolation("search produced a table violating " +
                                 to_string(id));
      }
    }
    const auto canonical = canonical_form(model);
    models_.insert(std::vector<Index>(canonical.table.cells().begin(),
                                      canonical.table.cells().end()));
  }

  std::size_t n_;
  const VarietySpec& variety_;
  bool cancellative_;
  bool break_symmetry_;
  std::optional<std::size_t> limit_;

  std::vector<Law> laws_;
  std::vector<GroundInstance> instances_;
  std::vector<Index> assignments_;

  std::vector<Index> cells_;
  std::vector<std::uint32_t> row_used_;
  std::vector<std::uint32_t> col_used_;
  std::vector<int> trail_;
  std::vector<bool> settled_;
  std::vector<std::size_t> settled_trail_;
  bool row0_checked_ = false;
  std::size_t row0_checked_at_ = 0;

  std::set<std::vector<Index>> models_;
  SearchStats stats_;
};

void check_envelope(std::size_t order, const VarietySpec& v,
                    const SearchOptions& options) {
  if (order == 0) throw ArgumentError("model search needs order >= 1");
  const bool cancellative = forces_cancellation(v);
  const std::size_t full_limit = cancellative ? 8 : 5;
  const std::size_t witness_limit = cancellative ? 16 : 8;
  if (order > witness_limit) {
    throw ResourceError("order " + std::to_string(order) + " is beyond the " +
                        "supported envelope for " + v.name + " (max " +
                        std::to_string(witness_limit) + " in witness mode)");
  }
  if (order > full_limit && !options.limit) {
    throw ResourceError("full enumeration of " + v.name + " at order " +
                        std::to_string(order) + " is not supported (max " +
                        std::to_string(full_limit) +
                        "); pass a limit to search for witnesses instead");
  }
}

}  // namespace

SearchOutcome enumerate_models(std::size_t order, const VarietySpec& v,
                               const SearchOptions& options) {
  check_envelope(order, v, options);
  const auto start = std::chrono::steady_clock::now();

  TableSearch root(order, v, options.limit);
  SearchOutcome outcome;
  outcome.order = order;
  outcome.variety = v.name;

  std::set<std::vector<Index>> models;
  SearchStats stats;
  bool hit_limit = false;

  if (root.prepare()) {
    const int cell = root.first_open_cell();
    const unsigned workers =
        options.limit ? 1 : (options.threads ? options.threads : default_worker_count());
    if (cell < 0 || workers == 1) {
      root.descend();
      models = root.models();
      stats = root.stats();
      hit_limit = root.hit_limit();
    } else {
      // Split the root's first open cell across workers; each explores its
      // share of values on a private copy of the search state.
      const auto values = root.candidates(cell);
      std::vector<TableSearch> shards(std::min<std::size_t>(workers, values.size()),
                                      root);
      {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < shards.size(); ++w) {
          threads.emplace_back([&, w] {
            for (std::size_t k = w; k < values.size(); k += shards.size()) {
              shards[w].branch(cell, values[k]);
            }
          });
        }
      }
      stats = root.stats();
      ++stats.nodes;
      for (auto& shard : shards) {
        models.insert(shard.models().begin(), shard.models().end());
        stats.nodes += shard.stats().nodes;
        stats.propagation_failures += shard.stats().propagation_failures;
        stats.labeled_models += shard.stats().labeled_models;
      }
    }
  } else {
    stats = root.stats();
  }

  for (const auto& cells : models) {
    outcome.canonical_models.emplace_back(order, cells);
  }
  if (options.limit && outcome.canonical_models.size() > *options.limit) {
    outcome.canonical_models.erase(
        outcome.canonical_models.begin() + *options.limit,
        outcome.canonical_models.end());
  }
  outcome.count = outcome.canonical_models.size();
  outcome.complete = !hit_limit;
  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  outcome.stats = stats;
  return outcome;
}

std::vector<std::pair<std::size_t, std::size_t>> spectrum_scan(
    const VarietySpec& v, std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::size_t>> counts;
  for (std::size_t order = 1; order <= max_order; ++order) {
    counts.emplace_back(order, enumerate_models(order, v).count);
  }
  return counts;
}

// ---------------------------------------------------------------- oracle

std::size_t brute_force_oracle(std::size_t order, const VarietySpec& v) {
  const bool diagonal_fixed = forces_idempotency(v);
  if (order == 0 || order > 4 || (order == 4 && !diagonal_fixed)) {
    throw ResourceError("brute-force oracle supports order <= 3, or order 4 "
                        "for idempotent varieties");
  }
  std::vector<CompiledIdentity> laws;
  for (const auto& id : v.identities) laws.emplace_back(id);
  std::sort(laws.begin(), laws.end(), [](const auto& a, const auto& b) {
    return a.arity() < b.arity();
  });

  const auto n = static_cast<Index>(order);
  std::vector<Index> cells(order * order, 0);
  std::vector<std::size_t> free_cells;
  for (Index c = 0; c < order * order; ++c) {
    if (diagonal_fixed && c / n == c % n) {
      cells[c] = c / n;
    } else {
      free_cells.push_back(c);
    }
  }

  std::vector<Index> inverse(order);
  std::vector<Index> perm(order);
  std::vector<Index> relabeled(order * order);
  std::set<std::vector<Index>> classes;
  for (;;) {
    const TableView view{order, cells};
    const bool model = std::all_of(laws.begin(), laws.end(),
                                   [&](const auto& law) { return law.holds(view); });
    if (model) {
      // Least table over all relabelings.
      std::vector<Index> least = cells;
      std::iota(inverse.begin(), inverse.end(), 0);
      do {
        for (Index a = 0; a < n; ++a) perm[inverse[a]] = a;
        for (Index a = 0; a < n; ++a) {
          for (Index b = 0; b < n; ++b) {
            relabeled[a * n + b] = perm[cells[inverse[a] * n + inverse[b]]];
          }
        }
        least = std::min(least, relabeled);
      } while (std::next_permutation(inverse.begin(), inverse.end()));
      classes.insert(least);
    }
    std::size_t k = free_cells.size();
    while (k > 0 && ++cells[free_cells[k - 1]] == n) cells[free_cells[--k]] = 0;
    if (k == 0) break;
  }
  return classes.size();
}

}  // namespace agband
