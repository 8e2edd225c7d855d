#include "logion/objective.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace logion;
using logion::testing::minepump;
using logion::testing::random_formula;

TEST(Trivial, Shape) {
  auto mp = minepump();
  EXPECT_EQ(trivial_condition(mp), parse("!(G(h -> X p) & G(m -> X !p))"));
  Specification one{"one", {}, {{"G1", parse("G a")}}, {}};
  EXPECT_EQ(trivial_condition(one), parse("! G a"));
  Specification three{"three", {}, {{"a", parse("a")}, {"b", parse("X b")}, {"c", parse("G c")}}, {}};
  EXPECT_EQ(trivial_condition(three), parse("!(a & (X b & G c))"));
  EXPECT_EQ(trivial_condition(three).size(), 1U + 2U + 2U + 2U + 1U);
}

TEST(Evaluate, EventuallyBothIsBc) {
  SatChecker sat;
  auto c = evaluate(parse("F(h & m)"), minepump(), sat);
  EXPECT_EQ(c.li, 1);
  EXPECT_EQ(c.min_vector, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(c.nt, Rational(1, 2));
  EXPECT_EQ(c.size_term, Rational(1, 4));
  EXPECT_EQ(c.score, Rational(11, 4));
  EXPECT_TRUE(c.is_bc);
  EXPECT_EQ(c.sat_calls, 5U);
}

// Dom & G1 & G(h & m) has no model (the domain property forbids h two steps
// after p held twice in a row), so dropping G2 does not restore consistency.
TEST(Evaluate, AlwaysBothFailsMinimalityUnderThisDomain) {
  SatChecker sat;
  auto c = evaluate(parse("G(h & m)"), minepump(), sat);
  EXPECT_EQ(c.li, 1);
  EXPECT_EQ(c.min_vector, (std::vector<Rational>{Rational(1, 2), Rational(0)}));
  EXPECT_EQ(c.nt, Rational(1, 2));
  EXPECT_FALSE(c.is_bc);
}

TEST(Evaluate, TrivialAndFalse) {
  SatChecker sat;
  auto mp = minepump();
  auto t = evaluate(trivial_condition(mp), mp, sat);
  EXPECT_EQ(t.li, 1);
  EXPECT_EQ(t.nt, Rational(0));
  EXPECT_FALSE(t.is_bc);
  auto f = evaluate(Formula::constant(false), mp, sat);
  EXPECT_EQ(f.li, 1);
  EXPECT_EQ(f.min_vector, (std::vector<Rational>{Rational(0), Rational(0)}));
  EXPECT_FALSE(f.is_bc);
}

TEST(Evaluate, SingleGoalUsesTrueForRemainder) {
  Specification s{"one", {{"d", parse("G !b")}}, {{"g", parse("G a")}}, {}};
  SatChecker sat;
  auto c = evaluate(parse("!a"), s, sat);
  EXPECT_EQ(c.li, 1);
  EXPECT_EQ(c.min_vector, (std::vector<Rational>{Rational(1)}));
  EXPECT_TRUE(c.is_bc);
  EXPECT_EQ(c.sat_calls, 4U);
}

TEST(Evaluate, InvariantsOnRandomCandidates) {
  std::mt19937_64 rng(40);
  SatChecker sat;
  auto mp = minepump();
  for (int i = 0; i < 300; ++i) {
    auto phi = random_formula(rng, 10, {{"h", "m", "p"}});
    auto c = evaluate(phi, mp, sat);
    auto sum = Rational(c.li) + c.nt + c.size_term;
    bool all = true;
    for (const auto& m : c.min_vector) {
      sum += m;
      all &= m == Rational(1, 2);
      ASSERT_TRUE(m == Rational(0) || m == Rational(1, 2));
    }
    ASSERT_EQ(c.score, sum);
    ASSERT_GT(c.score, Rational(0));
    ASSERT_LE(c.score, Rational(7, 2));
    ASSERT_EQ(c.is_bc, c.li == 1 && all && c.nt == Rational(1, 2) && !c.budget_exhausted);
    ASSERT_EQ(c.sat_calls, 5U);
    if (c.is_bc) {
      ASSERT_TRUE(verify_bc(phi, mp).is_bc()) << print(phi);
    }
  }
}

TEST(Evaluate, SmallerWinsOnTies) {
  SatChecker sat;
  auto mp = minepump();
  auto small = evaluate(parse("F(h & m)"), mp, sat);
  auto large = evaluate(parse("F(h & (m & m))"), mp, sat);
  ASSERT_TRUE(large.is_bc);
  EXPECT_LT(large.score, small.score);
}

TEST(Evaluate, EquivalentFormulaeAgree) {
  SatChecker sat;
  auto mp = minepump();
  EXPECT_EQ(evaluate(parse("F(h & m)"), mp, sat).is_bc, evaluate(parse("!G !(m & h)"), mp, sat).is_bc);
  EXPECT_EQ(evaluate(parse("G(h & m)"), mp, sat).is_bc, evaluate(parse("!F !(h & m)"), mp, sat).is_bc);
}

TEST(Evaluate, BudgetExhaustionDisqualifies) {
  SatConfig tiny;
  tiny.max_states = 1;
  SatChecker sat(tiny);
  auto c = evaluate(parse("F(h & m)"), minepump(), sat);
  EXPECT_TRUE(c.budget_exhausted);
  EXPECT_FALSE(c.is_bc);
  EXPECT_FALSE(verify_bc(parse("F(h & m)"), minepump(), tiny).is_bc());
}

TEST(VerifyBc, PerProperty) {
  auto mp = minepump();
  auto ok = verify_bc(parse("F(h & m)"), mp);
  EXPECT_TRUE(ok.inconsistency);
  EXPECT_EQ(ok.minimality, (std::vector<bool>{true, true}));
  EXPECT_TRUE(ok.non_triviality);
  EXPECT_TRUE(ok.is_bc());
  auto trivial = verify_bc(trivial_condition(mp), mp);
  EXPECT_FALSE(trivial.non_triviality);
  EXPECT_FALSE(trivial.is_bc());
}
