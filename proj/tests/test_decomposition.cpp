#include <gtest/gtest.h>

#include "agband/constructions.hpp"
#include "agband/decomposition.hpp"
#include "agband/errors.hpp"
#include "agband/law.hpp"
#include "agband/morphisms.hpp"

namespace agband {
namespace {

TEST(Partition, Validation) {
  EXPECT_THROW(Partition(3, {{0, 1}}), ArgumentError);
  EXPECT_THROW(Partition(3, {{0, 1}, {1, 2}}), ArgumentError);
  EXPECT_THROW(Partition(3, {{0, 1, 2}, {}}), ArgumentError);
  EXPECT_THROW(Partition(3, {{0, 1, 5}}), ArgumentError);
  const Partition p(4, {{3, 1}, {0, 2}});
  EXPECT_EQ(p.blocks()[0], (ElementSet{1, 3}));
  EXPECT_EQ(p.block_of(2), 1u);
  EXPECT_THROW(Partition::contiguous(6, 4), ArgumentError);
}

TEST(BandDecomposition, SingletonsGiveTheGroupoidBack) {
  for (const auto& g : {standard_g(), gbar_derived()}) {
    const auto check = check_band_decomposition(g, Partition::singletons(g.order()));
    ASSERT_TRUE(check.ok());
    EXPECT_TRUE(check.decomposition->quotient.same_table(g));
  }
}

TEST(BandDecomposition, GbarBlocks) {
  const auto g = gbar_derived();
  const auto check = check_band_decomposition(g, Partition::contiguous(16, 4));
  ASSERT_TRUE(check.ok());
  const auto& quotient = check.decomposition->quotient;
  EXPECT_EQ(quotient.labels(), (std::vector<std::string>{"B0", "B1", "B2", "B3"}));
  EXPECT_TRUE(quotient.same_table(gbar_scaffold().block_table));
  EXPECT_TRUE(check_variety(quotient, presets::aragb()).holds());
  EXPECT_TRUE(iso_search(quotient, standard_g()));
  for (const auto& block : check.decomposition->partition.blocks()) {
    EXPECT_TRUE(iso_search(restrict_to(g, block), standard_g()));
  }
}

TEST(BandDecomposition, WitnessOnFailure) {
  const auto g = standard_g();
  const auto check = check_band_decomposition(g, Partition(4, {{0, 1}, {2, 3}}));
  ASSERT_FALSE(check.ok());
  const auto& w = *check.witness;
  const Partition p(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(p.block_of(w.u), p.block_of(w.u2));
  EXPECT_EQ(p.block_of(w.v), p.block_of(w.v2));
  EXPECT_NE(p.block_of(g(w.u, w.v)), p.block_of(g(w.u2, w.v2)));
  EXPECT_THROW(check_band_decomposition(g, Partition::singletons(3)), ArgumentError);
}

TEST(BandDecomposition, QuotientsOfAgGroupoidsAreAg) {
  const auto levels = tower(3);
  for (unsigned n = 2; n <= 3; ++n) {
    const auto d = extension_block_decomposition(n);
    EXPECT_TRUE(check_variety(d.quotient, presets::ag()).holds());
  }
}

TEST(ExtensionBlocks, Levels) {
  const auto d1 = extension_block_decomposition(1);
  EXPECT_EQ(d1.partition, Partition::singletons(4));
  EXPECT_TRUE(d1.quotient.same_table(standard_g()));
  const auto d2 = extension_block_decomposition(2);
  EXPECT_EQ(d2.partition, Partition::contiguous(16, 4));
  EXPECT_TRUE(iso_search(d2.quotient, standard_g()));
  const auto d3 = extension_block_decomposition(3);
  EXPECT_EQ(d3.partition.size(), 4u);
  EXPECT_EQ(d3.partition.blocks()[0].size(), 16u);
  EXPECT_THROW(extension_block_decomposition(0), ArgumentError);
}

void expect_copy_partition(const FiniteGroupoid& g) {
  const auto p = g_copy_partition(g);
  EXPECT_EQ(p.size(), g.order() / 4);
  for (const auto& block : p.blocks()) {
    const auto sub = restrict_to(g, block);
    EXPECT_TRUE(check_variety(sub, presets::aragb()).holds());
    EXPECT_TRUE(iso_search(sub, standard_g()));
  }
}

TEST(CopyPartition, TowerLevels) {
  const auto levels = tower(3);
  EXPECT_EQ(g_copy_partition(levels[1]).size(), 1u);
  expect_copy_partition(levels[2]);
  expect_copy_partition(levels[3]);
}

TEST(CopyPartition, Errors) {
  EXPECT_THROW(g_copy_partition(trivial_groupoid()), ArgumentError);
  const FiniteGroupoid z2(2, {0, 1, 1, 0});
  EXPECT_THROW(g_copy_partition(z2), ArgumentError);
  EXPECT_THROW(g_copy_partition(gbar_derived()), PreconditionError);
}

TEST(CopyAudit, G) {
  const auto audit = copy_intersection_audit(standard_g());
  EXPECT_EQ(audit.copies.size(), 1u);
  EXPECT_TRUE(audit.intersection_sizes.empty());
  EXPECT_TRUE(audit.trichotomy_holds);
}

TEST(CopyAudit, G2Trichotomy) {
  const auto audit = copy_intersection_audit(tower(2)[2]);
  EXPECT_TRUE(audit.trichotomy_holds);
  std::uint64_t pairs = 0;
  for (const auto& [size, count] : audit.intersection_sizes) {
    EXPECT_TRUE(size == 0 || size == 1) << size;
    pairs += count;
  }
  const auto c = audit.copies.size();
  EXPECT_EQ(pairs, c * (c - 1) / 2);
}

TEST(CopyAudit, ResourceLimit) {
  EXPECT_THROW(copy_intersection_audit(tower(4)[4]), ResourceError);
}

}  // namespace
}  // namespace agband
