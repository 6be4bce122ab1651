#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "agband/constructions.hpp"
#include "agband/errors.hpp"
#include "agband/morphisms.hpp"
#include "support.hpp"

namespace agband {
namespace {

TEST(Classify, ExamplesOnG) {
  const auto g = standard_g();
  EXPECT_EQ(classify_mapping(std::vector<Index>{0, 1, 2, 3}, g, g), MappingKind::kIso);
  EXPECT_EQ(classify_mapping(std::vector<Index>{0, 1, 3, 2}, g, g),
            MappingKind::kAntiIso);
  // The 3-cycle (b ab ba).
  EXPECT_EQ(classify_mapping(std::vector<Index>{0, 2, 3, 1}, g, g), MappingKind::kIso);
  EXPECT_THROW(classify_mapping(std::vector<Index>{0, 0, 1, 2}, g, g), ArgumentError);
  EXPECT_THROW(classify_mapping(std::vector<Index>{0, 1, 2}, g, g), ArgumentError);
}

TEST(Classify, NeitherOnAnOrdinaryMagma) {
  // Cyclic addition mod 3 has a non-automorphism bijection, the swap of 0 and 1.
  const FiniteGroupoid z3(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  EXPECT_EQ(classify_mapping(std::vector<Index>{1, 0, 2}, z3, z3),
            MappingKind::kNeither);
  EXPECT_EQ(to_string(MappingKind::kNeither), "NEITHER");
}

TEST(Census, EveryBijectionOfGIsIsoOrAnti) {
  const auto census = classify_all_bijections(standard_g());
  EXPECT_EQ(census.totals, (KindCounts{12, 12, 0}));
  std::map<std::string, KindCounts> by_name;
  for (const auto& [type, counts] : census.by_cycle_type) {
    by_name[describe_cycle_type(type)] = counts;
  }
  EXPECT_EQ(by_name["identity"], (KindCounts{1, 0, 0}));
  EXPECT_EQ(by_name["3-cycle"], (KindCounts{8, 0, 0}));
  EXPECT_EQ(by_name["double-transposition"], (KindCounts{3, 0, 0}));
  EXPECT_EQ(by_name["transposition"], (KindCounts{0, 6, 0}));
  EXPECT_EQ(by_name["4-cycle"], (KindCounts{0, 6, 0}));
}

TEST(Census, ResourceLimit) {
  EXPECT_THROW(classify_all_bijections(tower(2)[2]), ResourceError);
}

TEST(CycleType, Basics) {
  EXPECT_EQ(cycle_type(std::vector<Index>{1, 2, 0, 3}),
            (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(describe_cycle_type({1, 1, 1, 1}), "identity");
  EXPECT_EQ(describe_cycle_type({2, 2}), "double-transposition");
  EXPECT_EQ(describe_cycle_type({4}), "4-cycle");
}

TEST(IsoSearch, OppositeOfG) {
  const auto g = standard_g();
  const auto found = iso_search(opposite(g), g);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->kind, MappingKind::kIso);
  EXPECT_EQ(found->images, (std::vector<Index>{0, 1, 3, 2}));
}

TEST(IsoSearch, WitnessIsLexicographicallyLeast) {
  const auto g = standard_g();
  std::vector<Index> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const auto src = relabel(g, perm);
    std::optional<std::vector<Index>> least;
    std::vector<Index> images(4);
    std::iota(images.begin(), images.end(), 0);
    do {
      if (!least && is_homomorphism(images, src, g)) least = images;
    } while (std::next_permutation(images.begin(), images.end()));
    const auto found = iso_search(src, g);
    ASSERT_TRUE(found);
    EXPECT_EQ(found->images, *least);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(IsoSearch, NotFound) {
  EXPECT_FALSE(iso_search(standard_g(), tower(2)[2]));
  const FiniteGroupoid z2(2, {0, 1, 1, 0});
  const FiniteGroupoid left_zero(2, {0, 0, 1, 1});
  EXPECT_FALSE(iso_search(z2, left_zero));
  EXPECT_FALSE(iso_search(gbar_derived(), tower(2)[2]));
}

TEST(IsoSearch, RandomRelabelingsOfG2AndG3) {
  std::mt19937 rng(31);
  const auto levels = tower(3);
  for (unsigned n : {2u, 3u}) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto perm = testing::random_permutation(levels[n].order(), rng);
      IsoSearchStats stats;
      const auto found = iso_search(relabel(levels[n], perm), levels[n], false, &stats);
      ASSERT_TRUE(found);
      EXPECT_EQ(found->kind, MappingKind::kIso);
      EXPECT_GT(stats.nodes, 0u);
    }
  }
}

TEST(IsoSearch, OppositeInvariance) {
  const auto levels = tower(2);
  for (unsigned n = 1; n <= 2; ++n) {
    EXPECT_TRUE(iso_search(levels[n], opposite(levels[n])));
    const auto anti = iso_search(levels[n], levels[n], true);
    ASSERT_TRUE(anti);
    EXPECT_EQ(anti->kind, MappingKind::kAntiIso);
  }
}

TEST(AntiToIso, OrderFourRecipe) {
  const auto g = standard_g();
  const auto op = opposite(g);
  const auto phi = verified({0, 1, 2, 3}, g, op);
  ASSERT_EQ(phi.kind, MappingKind::kAntiIso);
  const auto iso = anti_to_iso(phi, g, op);
  EXPECT_EQ(iso.kind, MappingKind::kIso);
  EXPECT_EQ(iso.images, (std::vector<Index>{0, 1, 3, 2}));
}

TEST(AntiToIso, OrderSixteenFallsBackToSearch) {
  const auto g2 = tower(2)[2];
  const auto op = opposite(g2);
  std::vector<Index> identity(16);
  std::iota(identity.begin(), identity.end(), 0);
  const auto phi = verified(identity, g2, op);
  ASSERT_EQ(phi.kind, MappingKind::kAntiIso);
  EXPECT_EQ(anti_to_iso(phi, g2, op).kind, MappingKind::kIso);
}

TEST(AntiToIso, Errors) {
  const auto g = standard_g();
  EXPECT_THROW(anti_to_iso(Mapping{4, 4, {0, 1, 2, 3}, MappingKind::kAntiIso}, g,
                           standard_g()),
               ArgumentError);
  const FiniteGroupoid z2(2, {0, 1, 1, 0});
  // A commutative groupoid: every automorphism is also an anti-automorphism.
  EXPECT_EQ(anti_to_iso(verified({0, 1}, z2, z2), z2, z2).kind, MappingKind::kIso);
}

TEST(Compose, ClosureOfKinds) {
  std::mt19937 rng(41);
  const auto g = standard_g();
  std::vector<std::vector<Index>> isos, antis;
  std::vector<Index> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    (classify_mapping(perm, g, g) == MappingKind::kIso ? isos : antis).push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int trial = 0; trial < 100; ++trial) {
    const auto& f = isos[rng() % isos.size()];
    const auto& h = isos[rng() % isos.size()];
    const auto& a = antis[rng() % antis.size()];
    EXPECT_EQ(classify_mapping(compose(f, h), g, g), MappingKind::kIso);
    EXPECT_EQ(classify_mapping(compose(f, a), g, g), MappingKind::kAntiIso);
    EXPECT_EQ(classify_mapping(compose(a, f), g, g), MappingKind::kAntiIso);
  }
}

TEST(CanonicalIso, GAndShuffledCopies) {
  const auto g = standard_g();
  EXPECT_EQ(canonical_iso(g, std::vector<Index>{0, 1, 2, 3}).images,
            (std::vector<Index>{0, 1, 2, 3}));
  std::mt19937 rng(51);
  const auto levels = tower(3);
  for (unsigned n : {2u, 3u}) {
    for (int trial = 0; trial < (n == 2 ? 10 : 2); ++trial) {
      const auto k = relabel(levels[n], testing::random_permutation(levels[n].order(), rng));
      const auto enumeration = testing::random_permutation(k.order(), rng);
      const auto m = canonical_iso(k, enumeration);
      EXPECT_EQ(m.kind, MappingKind::kIso);
      EXPECT_TRUE(is_homomorphism(m.images, k, levels[n]));
    }
  }
}

TEST(CanonicalIso, Errors) {
  const auto g = standard_g();
  EXPECT_THROW(canonical_iso(trivial_groupoid(), std::vector<Index>{0}), ArgumentError);
  EXPECT_THROW(canonical_iso(g, std::vector<Index>{0, 1, 1, 2}), ArgumentError);
  std::mt19937 rng(1);
  EXPECT_THROW(canonical_iso(gbar_derived(), testing::random_permutation(16, rng)),
               PreconditionError);
}

}  // namespace
}  // namespace agband
