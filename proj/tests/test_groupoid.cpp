#include <gtest/gtest.h>

#include <sstream>

#include "agband/cayley_io.hpp"
#include "agband/constructions.hpp"
#include "agband/errors.hpp"
#include "support.hpp"

namespace agband {
namespace {

TEST(Groupoid, ProductReadsTheTable) {
  const auto g = standard_g();
  EXPECT_EQ(g.product(0, 1), 2u);  // a*b = ab
  EXPECT_EQ(g.product(1, 0), 3u);  // b*a = ba
  EXPECT_EQ(g.product(2, 2), 2u);
  EXPECT_EQ(g.label(3), "ba");
  EXPECT_EQ(g.index_of("ab"), Index{2});
  EXPECT_FALSE(g.index_of("zz"));
}

TEST(Groupoid, ProductOutOfRangeThrows) {
  EXPECT_THROW(standard_g().product(4, 0), BoundsError);
  EXPECT_THROW(standard_g().product(0, 7), BoundsError);
}

TEST(Groupoid, RejectsMalformedTables) {
  EXPECT_THROW(FiniteGroupoid(0, {}), ArgumentError);
  EXPECT_THROW(FiniteGroupoid(2, {0, 1, 1}), ArgumentError);
  EXPECT_THROW(FiniteGroupoid(2, {0, 1, 2, 0}), ArgumentError);
  EXPECT_THROW(FiniteGroupoid(2, {0, 1, 1, 0}, {"p", "p"}), ArgumentError);
  EXPECT_THROW(FiniteGroupoid(2, {0, 1, 1, 0}, {"p"}), ArgumentError);
  EXPECT_THROW(FiniteGroupoid(2, {0, 1, 1, 0}, {"p", ""}), ArgumentError);
}

TEST(Groupoid, DefaultLabels) {
  const FiniteGroupoid g(3, {0, 0, 0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"e0", "e1", "e2"}));
}

TEST(Groupoid, TrivialGroupoid) {
  const auto t = trivial_groupoid();
  EXPECT_EQ(t.order(), 1u);
  EXPECT_EQ(t(0, 0), 0u);
}

TEST(Groupoid, OppositeTransposes) {
  const auto g = standard_g();
  const auto op = opposite(g);
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) EXPECT_EQ(op(i, j), g(j, i));
  }
  EXPECT_EQ(op.labels(), g.labels());
}

TEST(Groupoid, OppositeIsAnInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_groupoid(1 + trial % 6, rng);
    EXPECT_EQ(opposite(opposite(g)), g);
  }
}

TEST(Groupoid, RelabelMovesElements) {
  const auto g = standard_g();
  const std::vector<Index> perm{1, 0, 3, 2};
  const auto r = relabel(g, perm);
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) EXPECT_EQ(r(perm[i], perm[j]), perm[g(i, j)]);
  }
  EXPECT_EQ(r.label(1), "a");
  EXPECT_THROW(relabel(g, std::vector<Index>{0, 0, 1, 2}), ArgumentError);
}

TEST(Groupoid, AnyTwoElementsOfGGenerateG) {
  const auto g = standard_g();
  for (Index c = 0; c < 4; ++c) {
    for (Index d = 0; d < 4; ++d) {
      if (c != d) {
        EXPECT_EQ(generated_subgroupoid(g, {c, d}), (ElementSet{0, 1, 2, 3}));
      }
    }
  }
  EXPECT_EQ(generated_subgroupoid(g, {2}), (ElementSet{2}));
}

TEST(Groupoid, EmptySeedsRejected) {
  EXPECT_THROW(generated_subgroupoid(standard_g(), std::span<const Index>{}),
               ArgumentError);
}

TEST(Groupoid, ClosureIsMonotone) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = testing::random_groupoid(6, rng);
    const Index a = rng() % 6;
    const Index b = rng() % 6;
    const auto small = generated_subgroupoid(g, {a});
    const auto big = generated_subgroupoid(g, {a, b});
    EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    EXPECT_TRUE(is_closed(g, big));
    EXPECT_EQ(generated_subgroupoid(g, big), big);
  }
}

TEST(Groupoid, TwoElementsOfG2GenerateFourElements) {
  const auto g2 = tower(2)[2];
  for (Index c = 0; c < 16; ++c) {
    for (Index d = 0; d < 16; ++d) {
      if (c != d) EXPECT_EQ(generated_subgroupoid(g2, {c, d}).size(), 4u);
    }
  }
}

TEST(Groupoid, RestrictReindexesAscending) {
  const auto g2 = tower(2)[2];
  const auto copy = generated_subgroupoid(g2, {0, 5});
  const auto sub = restrict_to(g2, copy);
  EXPECT_EQ(sub.order(), 4u);
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) {
      EXPECT_EQ(copy[sub(i, j)], g2(copy[i], copy[j]));
    }
  }
  EXPECT_EQ(restrict_to(g2, {0, 1, 2, 3}).order(), 4u);
}

TEST(Groupoid, RestrictRejectsOpenSubsets) {
  try {
    restrict_to(standard_g(), {0, 1});
    FAIL() << "expected ClosureError";
  } catch (const ClosureError& e) {
    EXPECT_EQ(e.u, 0u);
    EXPECT_EQ(e.v, 1u);
    EXPECT_EQ(e.product, 2u);
  }
  EXPECT_THROW(restrict_to(standard_g(), {0, 9}), BoundsError);
}

TEST(Groupoid, Cancellativity) {
  EXPECT_TRUE(is_cancellative(standard_g()).both());
  const FiniteGroupoid left_zero(2, {0, 0, 1, 1});  // x*y = x
  const auto report = is_cancellative(left_zero);
  EXPECT_FALSE(report.left);
  EXPECT_TRUE(report.right);
  ASSERT_TRUE(report.left_witness);
  const auto& w = *report.left_witness;
  EXPECT_NE(w.a, w.b);
  EXPECT_EQ(left_zero(w.x, w.a), left_zero(w.x, w.b));
}

TEST(Groupoid, Commutativity) {
  EXPECT_FALSE(standard_g().is_commutative());
  EXPECT_TRUE(FiniteGroupoid(2, {0, 1, 1, 0}).is_commutative());
}

TEST(CayleyIo, JsonRoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::random_groupoid(1 + trial % 7, rng);
    EXPECT_EQ(groupoid_from_json(to_json(g)), g);
  }
  const auto g2 = tower(2)[2];
  EXPECT_EQ(groupoid_from_json(to_json(g2)), g2);
}

TEST(CayleyIo, SchemaErrors) {
  using nlohmann::json;
  for (const char* bad : {R"([])", R"({"table": [[0]]})",
                          R"({"order": 2, "table": [[0, 1]]})",
                          R"({"order": 1, "table": [[-1]]})",
                          R"({"order": 1, "table": [[3]]})",
                          R"({"order": 1, "table": [[0]], "labels": [1]})",
                          R"({"order": 1, "table": [0]})"}) {
    EXPECT_THROW(groupoid_from_json(json::parse(bad)), ArgumentError) << bad;
  }
  EXPECT_EQ(groupoid_from_json(json::parse(R"({"order": 1, "table": [[0]]})")).order(),
            1u);
}

TEST(CayleyIo, ReadsStreamAndReportsBadInput) {
  std::istringstream good(to_json(standard_g()).dump());
  EXPECT_EQ(read_groupoid("-", good), standard_g());
  std::istringstream bad("{not json");
  EXPECT_THROW(read_groupoid("-", bad), ArgumentError);
  std::istringstream unused;
  EXPECT_THROW(read_groupoid("/nonexistent/file.json", unused), ArgumentError);
}

TEST(CayleyIo, TextRendering) {
  const auto text = render_text(standard_g());
  std::istringstream lines(text);
  std::string header;
  std::getline(lines, header);
  EXPECT_NE(header.find("ab"), std::string::npos);
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 4u);
}

}  // namespace
}  // namespace agband
