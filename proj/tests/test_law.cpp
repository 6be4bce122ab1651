#include <gtest/gtest.h>

#include <random>

#include "agband/constructions.hpp"
#include "agband/errors.hpp"
#include "agband/law.hpp"
#include "support.hpp"

namespace agband {
namespace {

TEST(Parse, JuxtapositionAndParentheses) {
  const auto id = parse_identity("(xy)z = (zy)x");
  EXPECT_EQ(to_string(id), "((x y) z) = ((z y) x)");
  EXPECT_EQ(id.variables, (std::vector<char>{'x', 'y', 'z'}));

  EXPECT_EQ(to_string(parse_identity("x = xx")), "x = (x x)");
  EXPECT_EQ(to_string(parse_identity("(xy)x=y")), "((x y) x) = y");
  EXPECT_EQ(to_string(parse_identity(" a ( b c ) = c(ba) ")),
            "(a (b c)) = (c (b a))");
  EXPECT_EQ(to_string(parse_identity("(xy)(zw) = (xz)(yw)")),
            "((x y) (z w)) = ((x z) (y w))");
}

TEST(Parse, RoundTripsThroughToString) {
  for (const char* text : {"(xy)z = (zy)x", "x = xx", "(xy)(yz) = y",
                           "((ab)(cd))e = a(b(c(de)))", "x = y"}) {
    const auto id = parse_identity(text);
    EXPECT_EQ(parse_identity(to_string(id)), id) << text;
  }
}

// Random terms print and re-parse to the same value.
Term random_term(std::mt19937& rng, int depth) {
  if (depth == 0 || rng() % 3 == 0) return Term::variable("xyzw"[rng() % 4]);
  return Term::product(random_term(rng, depth - 1), random_term(rng, depth - 1));
}

TEST(Parse, RandomRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto id = make_identity(random_term(rng, 4), random_term(rng, 4));
    EXPECT_EQ(parse_identity(to_string(id)), id);
  }
}

TEST(Parse, ErrorsCarryOffsets) {
  for (const char* bad : {"", "x", "x =", "= x", "(x) = x", "x1 = x",
                          "x_ = x", "(xy = x", "xyz = x", "x = y = z", "x + y = x"}) {
    EXPECT_THROW(parse_identity(bad), ParseError) << bad;
  }
  try {
    parse_identity("xy = x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(Presets, NamesAndLookup) {
  EXPECT_EQ(presets::aragb().identities.size(), 3u);
  EXPECT_EQ(find_preset("aragb")->name, "ARAGB");
  EXPECT_FALSE(find_preset("nope"));
  for (const auto& name : preset_names()) EXPECT_TRUE(find_preset(name)) << name;
}

TEST(Presets, VarietyFromString) {
  const auto v = variety_from_string("x = xx; (xy)x = y");
  EXPECT_EQ(v.identities.size(), 2u);
  EXPECT_THROW(variety_from_string(" ; "), ArgumentError);
  EXPECT_THROW(variety_from_string("x = xx; (x"), ParseError);
  EXPECT_THROW(make_variety("empty", {}), ArgumentError);
}

TEST(Evaluate, TermsAndUnboundVariables) {
  const auto g = standard_g();
  const auto t = parse_term("(xy)x");
  EXPECT_EQ(eval_term(t, g, {{'x', 0}, {'y', 1}}), 1u);
  EXPECT_THROW(eval_term(t, g, {{'x', 0}}), EvaluationError);
  EXPECT_THROW(eval_term(t, g, {{'x', 0}, {'y', 9}}), BoundsError);
}

TEST(Evaluate, CompiledAgreesWithInterpreter) {
  std::mt19937 rng(9);
  const auto id = parse_identity("(xy)(zw) = (xz)(yw)");
  const CompiledIdentity compiled(id);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_groupoid(3, rng);
    std::vector<Index> values{Index(rng() % 3), Index(rng() % 3),
                              Index(rng() % 3), Index(rng() % 3)};
    Environment env;
    for (std::size_t k = 0; k < 4; ++k) env[id.variables[k]] = values[k];
    const auto [l, r] = compiled.evaluate(g.view(), values);
    EXPECT_EQ(l, eval_term(id.lhs, g, env));
    EXPECT_EQ(r, eval_term(id.rhs, g, env));
  }
}

TEST(Evaluate, OversizedTermsRejected) {
  Term t = Term::variable('x');
  for (int k = 0; k < 70; ++k) t = Term::product(t, Term::variable('y'));
  EXPECT_THROW(CompiledIdentity(make_identity(t, Term::variable('x'))),
               ResourceError);
}

TEST(Check, GIsAnAragb) {
  const auto report = check_variety(standard_g(), presets::aragb());
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.first_failure(), nullptr);
  EXPECT_EQ(report.results[0].second.assignments_checked, 64u);
}

TEST(Check, CounterexampleIsFirstInLexOrder) {
  const auto g = gbar_derived();
  const auto report = check_identity(g, parse_identity("(xy)x = y"));
  ASSERT_FALSE(report.holds);
  const auto& w = *report.counterexample;
  // Inside the copy of G on {a, x, ax, xa} the law holds; it first fails
  // at x = a, y = b.
  EXPECT_EQ(w, (std::vector<Index>{0, 4}));
  EXPECT_EQ(report.lhs_value, g(g(0, 4), 0));
  EXPECT_NE(report.lhs_value, report.rhs_value);
}

TEST(Check, LeftZeroBandFailsAg) {
  const FiniteGroupoid left_zero(2, {0, 0, 1, 1});
  const auto report = check_variety(left_zero, presets::aragb());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_TRUE(same_law(report.first_failure()->first, parse_identity("(xy)z = (zy)x")));
}

TEST(DerivedLaws, HoldOnTheTower) {
  const auto levels = tower(2);
  const auto medial = parse_identity("(xy)(zw) = (xz)(yw)");
  const auto other = parse_identity("a(bc) = c(ba)");
  for (unsigned n = 0; n <= 2; ++n) {
    EXPECT_TRUE(check_identity(levels[n], medial).holds) << n;
    EXPECT_TRUE(check_identity(levels[n], other).holds) << n;
    EXPECT_TRUE(check_variety(levels[n], presets::aragb()).holds()) << n;
  }
}

TEST(DerivedLaws, MedialHoldsOnRandomAgBands) {
  // Relabelings of G_2 and their opposites stay in the variety.
  std::mt19937 rng(17);
  const auto g2 = tower(2)[2];
  const auto medial = parse_identity("(xy)(zw) = (xz)(yw)");
  for (int trial = 0; trial < 5; ++trial) {
    const auto r = relabel(g2, testing::random_permutation(16, rng));
    EXPECT_TRUE(check_variety(r, presets::aragb()).holds());
    EXPECT_TRUE(check_variety(opposite(r), presets::aragb()).holds());
    EXPECT_TRUE(check_identity(r, medial).holds);
  }
}

TEST(Laws, SameLawUpToRenamingAndSides) {
  EXPECT_FALSE(same_law(parse_identity("(ab)a = b"), parse_identity("y = (yx)y")));
  EXPECT_TRUE(same_law(parse_identity("(ab)a = b"), parse_identity("b = (ab)a")));
  EXPECT_TRUE(same_law(parse_identity("(ab)a = b"), parse_identity("(xy)x = y")));
  EXPECT_FALSE(same_law(parse_identity("(xy)x = y"), parse_identity("(xy)y = x")));
}

TEST(Laws, ForcedProperties) {
  EXPECT_TRUE(forces_cancellation(presets::aragb()));
  EXPECT_TRUE(forces_cancellation(variety_from_string("x(yx) = y")));
  EXPECT_FALSE(forces_cancellation(presets::band()));
  EXPECT_TRUE(forces_idempotency(presets::band()));
  EXPECT_TRUE(forces_idempotency(variety_from_string("aa = a")));
  EXPECT_FALSE(forces_idempotency(presets::ag()));
}

}  // namespace
}  // namespace agband
