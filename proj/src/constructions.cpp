#include "agband/constructions.hpp"

#include <array>
#include <string>
#include <utility>

#include "agband/errors.hpp"
#include "agband/law.hpp"

namespace agband {

namespace {

constexpr unsigned kCachedLevels = 4;

// Product of two elements of H^x, each given as (block, element of H).
// `mul` multiplies inside H and `a` is the designated element.
template <typename T, typename Mul>
std::pair<Block, T> extension_product(Block left, T h, Block right, T k, T a,
                                      Mul&& mul) {
  using enum Block;
  switch (left) {
    case kBase:
      switch (right) {
        case kBase:   return {kBase, mul(h, k)};
        case kXLeft:  return {kAX, mul(mul(k, a), h)};
        case kXRight: return {kXLeft, mul(k, h)};
        case kAX:     return {kXRight, mul(mul(h, k), mul(a, h))};
      }
      break;
    case kXLeft:
      switch (right) {
        case kBase:   return {kXRight, mul(k, h)};
        case kXLeft:  return {kXLeft, mul(h, k)};
        case kXRight: return {kAX, mul(k, mul(a, h))};
        case kAX:     return {kBase, mul(a, mul(h, k))};
      }
      break;
    case kXRight:
      switch (right) {
        case kBase:   return {kAX, mul(mul(h, a), mul(k, h))};
        case kXLeft:  return {kBase, mul(k, h)};
        case kXRight: return {kXRight, mul(h, k)};
        case kAX:     return {kXLeft, mul(mul(a, h), k)};
      }
      break;
    case kAX:
      switch (right) {
        case kBase:   return {kXLeft, mul(h, mul(k, a))};
        case kXLeft:  return {kXRight, mul(mul(h, k), a)};
        case kXRight: return {kBase, mul(mul(a, h), mul(k, a))};
        case kAX:     return {kAX, mul(h, k)};
      }
      break;
  }
  throw InvariantViolation("unreachable block combination");
}

std::string wrap(const std::string& label) {
  return label.find('*') == std::string::npos ? label : "(" + label + ")";
}

std::uint64_t power_of_four(unsigned level) { return std::uint64_t{1} << (2 * level); }

const std::vector<FiniteGroupoid>& cached_tower() {
  static const std::vector<FiniteGroupoid> levels = tower(kCachedLevels);
  return levels;
}

}  // namespace

TowerElement locate(unsigned level, std::uint64_t index) {
  if (level > 31) throw ArgumentError("tower level too large");
  if (index >= power_of_four(level)) {
    throw BoundsError("index " + std::to_string(index) + " is not in level " +
                      std::to_string(level));
  }
  if (level == 0) return TowerElement{0, 0, Block::kBase, 0};
  const auto block_size = power_of_four(level - 1);
  return TowerElement{level, index, static_cast<Block>(index / block_size),
                      index % block_size};
}

FiniteGroupoid standard_g() {
  // Elements a, b, ab, ba.
  return FiniteGroupoid::from_rows({{0, 2, 3, 1},
                                    {3, 1, 0, 2},
                                    {1, 3, 2, 0},
                                    {2, 0, 1, 3}},
                                   {"a", "b", "ab", "ba"});
}

FiniteGroupoid extend(const FiniteGroupoid& h, Index a,
                      std::string_view x_label) {
  const auto n = h.order();
  if (n < 4) {
    throw ArgumentError("extend needs a base of order at least 4, got " +
                        std::to_string(n));
  }
  if (a >= n) {
    throw BoundsError("designated element " + std::to_string(a) +
                      " outside order " + std::to_string(n));
  }
  if (x_label.empty() || h.index_of(x_label)) {
    throw ArgumentError("label '" + std::string(x_label) +
                        "' is empty or already used by the base");
  }
  const auto report = check_variety(h, presets::aragb());
  if (const auto* failure = report.first_failure()) {
    throw PreconditionError("extend needs an ARAGB base; identity " +
                            to_string(failure->first) + " fails");
  }

  const std::string x(x_label);
  std::vector<std::string> labels;
  labels.reserve(4 * n);
  for (Index i = 0; i < n; ++i) labels.push_back(h.label(i));
  for (Index i = 0; i < n; ++i) labels.push_back(x + "*" + wrap(h.label(i)));
  for (Index i = 0; i < n; ++i) labels.push_back(wrap(h.label(i)) + "*" + x);
  const std::string ax = "(" + wrap(h.label(a)) + "*" + x + ")";
  for (Index i = 0; i < n; ++i) {
    labels.push_back(i == a ? x : ax + "*" + wrap(h.label(i)));
  }

  auto mul = [&h](Index u, Index v) { return h(u, v); };
  const auto order = 4 * n;
  std::vector<Index> cells(order * order);
  for (Index i = 0; i < order; ++i) {
    for (Index j = 0; j < order; ++j) {
      auto [block, inner] =
          extension_product<Index>(static_cast<Block>(i / n), i % n,
                                   static_cast<Block>(j / n), j % n, a, mul);
      cells[i * order + j] = static_cast<Index>(block) * n + inner;
    }
  }
  return FiniteGroupoid(order, std::move(cells), std::move(labels));
}

std::vector<FiniteGroupoid> tower(unsigned n) {
  std::vector<FiniteGroupoid> levels;
  levels.push_back(trivial_groupoid());
  if (n >= 1) levels.push_back(standard_g());
  for (unsigned k = 2; k <= n; ++k) {
    levels.push_back(extend(levels.back(), 0, "x" + std::to_string(k - 1)));
  }
  return levels;
}

std::uint64_t product_at_level(unsigned level, std::uint64_t i,
                               std::uint64_t j) {
  if (level > 31) throw ArgumentError("tower level too large");
  const auto size = power_of_four(level);
  if (i >= size || j >= size) {
    throw BoundsError("product_at_level: operand outside G_" +
                      std::to_string(level));
  }
  if (level <= kCachedLevels) {
    return cached_tower()[level](static_cast<Index>(i), static_cast<Index>(j));
  }
  const auto block_size = power_of_four(level - 1);
  auto mul = [level](std::uint64_t u, std::uint64_t v) {
    return product_at_level(level - 1, u, v);
  };
  auto [block, inner] = extension_product<std::uint64_t>(
      static_cast<Block>(i / block_size), i % block_size,
      static_cast<Block>(j / block_size), j % block_size, 0, mul);
  return static_cast<std::uint64_t>(block) * block_size + inner;
}

unsigned limit_level(std::uint64_t i, std::uint64_t j) {
  const auto top = std::max(i, j);
  unsigned level = 1;
  while (level < 32 && power_of_four(level) <= top) ++level;
  if (level == 32) throw ArgumentError("index beyond the supported range");
  return level;
}

std::uint64_t limit_product(std::uint64_t i, std::uint64_t j) {
  return product_at_level(limit_level(i, j), i, j);
}

FiniteGroupoid j_subband(unsigned n) {
  if (n == 0) throw ArgumentError("j_subband needs n >= 1");
  const auto levels = tower(n + 1);
  std::vector<Index> seeds{0};
  for (unsigned k = 1; k <= n; ++k) {
    seeds.push_back(adjoined_element(levels[k].order(), 0));
  }
  const auto& host = levels.back();
  const auto members = generated_subgroupoid(host, seeds);
  if (members.size() != power_of_four(n)) {
    throw InvariantViolation("generated sub-band has order " +
                             std::to_string(members.size()) + ", expected " +
                             std::to_string(power_of_four(n)));
  }
  return restrict_to(host, members);
}

// ---------------------------------------------------------------- G-bar

namespace {

enum GbarBlock : unsigned { kGa = 0, kGb = 1, kGab = 2, kGba = 3 };

// Elements of the base copy G_a.
constexpr Index kA = 0;
constexpr Index kX = 1;

// slot[block][g]: position inside the block of the element represented by
// g in G_a (g, (ab)g, gb, bg respectively). Follows
//   G_b  = (ab){xa, a, ax, x},  G_ab = {a, ax, xa, x}b,  G_ba = b{a, xa, x, ax}.
constexpr std::array<std::array<Index, 4>, 4> kSlot{{
    {0, 1, 2, 3},
    {1, 3, 2, 0},
    {0, 3, 1, 2},
    {0, 2, 3, 1},
}};

// Representative in G_a of each slot, inverse of kSlot.
constexpr std::array<std::array<Index, 4>, 4> kRepresentative{{
    {0, 1, 2, 3},
    {3, 0, 2, 1},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};

// Product of (left, g) and (right, k) where g, k range over G_a.
std::pair<GbarBlock, Index> gbar_product(const FiniteGroupoid& base,
                                         GbarBlock left, Index g,
                                         GbarBlock right, Index k) {
  auto m = [&base](Index u, Index v) { return base(u, v); };
  // Products inside one block obey the medial law, e.g.
  // ((ab)g)((ab)k) = (ab)(gk); likewise for G_ab and G_ba.
  switch (left) {
    case kGa:
      switch (right) {
        case kGa:  return {kGa, m(g, k)};
        case kGb:  return {kGab, m(kX, m(g, m(kA, k)))};
        case kGab: return {kGba, m(m(kA, m(k, g)), kX)};
        case kGba: return {kGb, m(m(g, kA), k)};
      }
      break;
    case kGb:
      switch (right) {
        case kGa:  return {kGba, m(m(kX, kA), m(k, g))};
        case kGb:  return {kGb, m(g, k)};
        case kGab: return {kGa, m(m(kX, g), m(k, kA))};
        case kGba: return {kGab, m(m(g, k), kA)};
      }
      break;
    case kGab:
      switch (right) {
        case kGa:  return {kGb, m(m(k, kA), m(g, k))};
        case kGb:  return {kGba, m(m(k, g), m(kX, kA))};
        case kGab: return {kGab, m(g, k)};
        case kGba: return {kGa, m(k, m(m(kA, g), kX))};
      }
      break;
    case kGba:
      switch (right) {
        case kGa:  return {kGab, m(k, g)};
        case kGb:  return {kGa, m(k, m(g, kX))};
        case kGab: return {kGb, m(g, m(kX, k))};
        case kGba: return {kGba, m(g, k)};
      }
      break;
  }
  throw InvariantViolation("unreachable block combination");
}

std::vector<std::string> gbar_labels() {
  return {"a",  "x",  "ax",       "xa",       "b",  "y",  "by",       "yb",
          "ab", "xy", "(ab)(xy)", "(xy)(ab)", "ba", "yx", "(ba)(yx)", "(yx)(ba)"};
}

}  // namespace

GbarScaffold gbar_scaffold() {
  auto g = standard_g();
  FiniteGroupoid base(4, std::vector<Index>(g.cells().begin(), g.cells().end()),
                      {"a", "x", "ax", "xa"});
  FiniteGroupoid blocks(4, std::vector<Index>(g.cells().begin(), g.cells().end()),
                        {"G_a", "G_b", "G_ab", "G_ba"});
  return GbarScaffold{std::move(base), std::move(blocks)};
}

FiniteGroupoid gbar_derived() {
  const auto scaffold = gbar_scaffold();
  const auto& base = scaffold.base_copy;
  std::vector<Index> cells(16 * 16);
  for (Index i = 0; i < 16; ++i) {
    const auto left = static_cast<GbarBlock>(i / 4);
    const Index g = kRepresentative[left][i % 4];
    for (Index j = 0; j < 16; ++j) {
      const auto right = static_cast<GbarBlock>(j / 4);
      const Index k = kRepresentative[right][j % 4];
      auto [block, rep] = gbar_product(base, left, g, right, k);
      if (scaffold.block_table(left, right) != block) {
        throw InvariantViolation("block product disagrees with block table");
      }
      cells[i * 16 + j] = block * 4 + kSlot[block][rep];
    }
  }
  return FiniteGroupoid(16, std::move(cells), gbar_labels());
}

FiniteGroupoid gbar_transcribed() {
  // 1-based, exactly as printed.
  static constexpr std::array<std::array<Index, 16>, 16> kPrinted{{
      {1, 3, 4, 2, 9, 11, 12, 10, 16, 14, 13, 15, 6, 8, 7, 5},
      {4, 2, 1, 3, 12, 10, 9, 11, 13, 15, 16, 14, 7, 5, 6, 8},
      {2, 4, 3, 1, 10, 12, 11, 9, 15, 13, 14, 16, 5, 7, 8, 6},
      {3, 1, 2, 4, 11, 9, 10, 12, 14, 16, 12, 13, 8, 6, 5, 7},
      {13, 15, 16, 14, 5, 7, 8, 6, 2, 4, 3, 1, 12, 10, 9, 11},
      {16, 14, 13, 15, 8, 6, 5, 7, 3, 1, 2, 4, 9, 11, 12, 10},
      {14, 16, 15, 13, 6, 8, 7, 5, 1, 3, 4, 2, 11, 9, 10, 12},
      {15, 13, 14, 16, 7, 5, 6, 8, 4, 2, 1, 3, 10, 12, 11, 9},
      {6, 8, 7, 5, 13, 15, 16, 14, 9, 11, 12, 10, 4, 2, 1, 3},
      {7, 5, 6, 8, 16, 14, 13, 15, 12, 10, 9, 11, 1, 3, 4, 2},
      {5, 7, 8, 6, 14, 16, 15, 13, 10, 12, 11, 9, 3, 1, 2, 4},
      {8, 6, 5, 7, 15, 13, 14, 16, 11, 9, 10, 12, 2, 4, 3, 1},
      {9, 11, 12, 10, 2, 4, 3, 1, 8, 6, 5, 7, 13, 15, 16, 14},
      {12, 10, 9, 11, 3, 1, 2, 4, 5, 7, 8, 6, 16, 14, 13, 15},
      {10, 12, 11, 9, 1, 3, 4, 2, 7, 5, 6, 8, 14, 16, 15, 13},
      {11, 9, 10, 12, 4, 2, 1, 3, 6, 8, 7, 5, 15, 13, 14, 16},
  }};
  std::vector<Index> cells;
  cells.reserve(256);
  for (const auto& row : kPrinted) {
    for (Index v : row) cells.push_back(v - 1);
  }
  return FiniteGroupoid(16, std::move(cells), gbar_labels());
}

std::vector<CellDiff> diff_tables(const FiniteGroupoid& a,
                                  const FiniteGroupoid& b) {
  if (a.order() != b.order()) {
    throw ArgumentError("cannot diff tables of orders " +
                        std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
  }
  std::vector<CellDiff> diffs;
  for (Index i = 0; i < a.order(); ++i) {
    for (Index j = 0; j < a.order(); ++j) {
      if (a(i, j) != b(i, j)) diffs.push_back({i, j, a(i, j), b(i, j)});
    }
  }
  return diffs;
}

}  // namespace agband
