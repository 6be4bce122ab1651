#include "agband/decomposition.hpp"

#include <algorithm>
#include <set>

#include "agband/constructions.hpp"
#include "agband/errors.hpp"
#include "agband/law.hpp"
#include "agband/morphisms.hpp"

namespace agband {

Partition::Partition(std::size_t order, std::vector<ElementSet> blocks)
    : blocks_(std::move(blocks)) {
  constexpr Index kNone = static_cast<Index>(-1);
  block_of_.assign(order, kNone);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    if (block.empty()) throw ArgumentError("partition has an empty block");
    std::sort(block.begin(), block.end());
    for (Index e : block) {
      if (e >= order) {
        throw ArgumentError("partition element " + std::to_string(e) +
                            " outside order " + std::to_string(order));
      }
      if (block_of_[e] != kNone) {
        throw ArgumentError("element " + std::to_string(e) +
                            " appears in more than one block");
      }
      block_of_[e] = static_cast<Index>(b);
    }
  }
  for (Index e = 0; e < order; ++e) {
    if (block_of_[e] == kNone) {
      throw ArgumentError("element " + std::to_string(e) +
                          " is not covered by the partition");
    }
  }
}

Partition Partition::singletons(std::size_t order) {
  std::vector<ElementSet> blocks;
  for (Index e = 0; e < order; ++e) blocks.push_back({e});
  return Partition(order, std::move(blocks));
}

Partition Partition::contiguous(std::size_t order, std::size_t block_size) {
  if (block_size == 0 || order % block_size != 0) {
    throw ArgumentError("block size must divide the order");
  }
  std::vector<ElementSet> blocks(order / block_size);
  for (Index e = 0; e < order; ++e) blocks[e / block_size].push_back(e);
  return Partition(order, std::move(blocks));
}

BandCheck check_band_decomposition(const FiniteGroupoid& g, const Partition& p) {
  if (p.order() != g.order()) {
    throw ArgumentError("partition covers " + std::to_string(p.order()) +
                        " elements, groupoid has " + std::to_string(g.order()));
  }
  const auto k = p.size();
  std::vector<Index> quotient(k * k);
  for (Index alpha = 0; alpha < k; ++alpha) {
    const auto& left = p.blocks()[alpha];
    for (Index beta = 0; beta < k; ++beta) {
      const auto& right = p.blocks()[beta];
      const Index u0 = left.front();
      const Index v0 = right.front();
      const Index target = p.block_of(g(u0, v0));
      for (Index u : left) {
        for (Index v : right) {
          if (p.block_of(g(u, v)) != target) {
            return BandCheck{std::nullopt, BlockWitness{u0, v0, u, v}};
          }
        }
      }
      quotient[alpha * k + beta] = target;
    }
  }
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < k; ++b) labels.push_back("B" + std::to_string(b));
  return BandCheck{
      BandDecomposition{p, FiniteGroupoid(k, std::move(quotient), std::move(labels))},
      std::nullopt};
}

BandDecomposition extension_block_decomposition(unsigned n) {
  if (n == 0) throw ArgumentError("extension_block_decomposition needs n >= 1");
  const auto levels = tower(n);
  const auto& top = levels.back();
  const auto partition = n == 1 ? Partition::singletons(top.order())
                                : Partition::contiguous(top.order(),
                                                        top.order() / 4);
  auto check = check_band_decomposition(top, partition);
  if (!check.ok()) {
    throw InvariantViolation("extension blocks of G_" + std::to_string(n) +
                             " do not form a band decomposition");
  }
  if (n >= 2) {
    for (const auto& block : partition.blocks()) {
      if (!iso_search(restrict_to(top, block), levels[n - 1])) {
        throw InvariantViolation("an extension block is not isomorphic to G_" +
                                 std::to_string(n - 1));
      }
    }
  }
  if (!iso_search(check.decomposition->quotient, standard_g())) {
    throw InvariantViolation("extension quotient is not isomorphic to G");
  }
  return std::move(*check.decomposition);
}

namespace {

void require_aragb(const FiniteGroupoid& g, const char* who) {
  const auto report = check_variety(g, presets::aragb());
  if (const auto* failure = report.first_failure()) {
    throw PreconditionError(std::string(who) + " needs an ARAGB; identity " +
                            to_string(failure->first) + " fails");
  }
}

class CopyPacker {
 public:
  explicit CopyPacker(const FiniteGroupoid& g)
      : g_(g), used_(g.order(), false), reference_(standard_g()) {}

  bool pack() {
    const auto first_free = std::find(used_.begin(), used_.end(), false);
    if (first_free == used_.end()) return true;
    const Index c = static_cast<Index>(first_free - used_.begin());
    for (Index d = c + 1; d < g_.order(); ++d) {
      if (used_[d]) continue;
      auto copy = generated_subgroupoid(g_, {c, d});
      if (copy.size() != 4 ||
          std::any_of(copy.begin(), copy.end(),
                      [this](Index e) { return used_[e]; })) {
        continue;
      }
      if (!iso_search(restrict_to(g_, copy), reference_)) continue;
      for (Index e : copy) used_[e] = true;
      blocks_.push_back(copy);
      if (pack()) return true;
      blocks_.pop_back();
      for (Index e : copy) used_[e] = false;
    }
    return false;
  }

  std::vector<ElementSet> blocks() && { return std::move(blocks_); }

 private:
  const FiniteGroupoid& g_;
  std::vector<bool> used_;
  FiniteGroupoid reference_;
  std::vector<ElementSet> blocks_;
};

}  // namespace

Partition g_copy_partition(const FiniteGroupoid& g) {
  std::size_t size = 1;
  while (size < g.order()) size *= 4;
  if (g.order() < 4 || size != g.order()) {
    throw ArgumentError("g_copy_partition needs order 4^n with n >= 1, got " +
                        std::to_string(g.order()));
  }
  require_aragb(g, "g_copy_partition");
  CopyPacker packer(g);
  if (!packer.pack()) {
    throw InvariantViolation("no partition into copies of G exists");
  }
  return Partition(g.order(), std::move(packer).blocks());
}

CopyAudit copy_intersection_audit(const FiniteGroupoid& g) {
  if (g.order() > 64) {
    throw ResourceError("copy_intersection_audit supports order <= 64");
  }
  require_aragb(g, "copy_intersection_audit");
  const auto reference = standard_g();
  std::set<ElementSet> distinct;
  for (Index c = 0; c < g.order(); ++c) {
    for (Index d = 0; d < g.order(); ++d) {
      if (c == d) continue;
      auto copy = generated_subgroupoid(g, {c, d});
      if (distinct.count(copy)) continue;
      if (iso_search(restrict_to(g, copy), reference)) distinct.insert(copy);
    }
  }
  CopyAudit audit;
  audit.copies.assign(distinct.begin(), distinct.end());
  for (std::size_t i = 0; i < audit.copies.size(); ++i) {
    for (std::size_t j = i + 1; j < audit.copies.size(); ++j) {
      ElementSet common;
      std::set_intersection(audit.copies[i].begin(), audit.copies[i].end(),
                            audit.copies[j].begin(), audit.copies[j].end(),
                            std::back_inserter(common));
      ++audit.intersection_sizes[common.size()];
      if (common.size() != 0 && common.size() != 1 && common.size() != 4) {
        audit.trichotomy_holds = false;
      }
    }
  }
  return audit;
}

}  // namespace agband
