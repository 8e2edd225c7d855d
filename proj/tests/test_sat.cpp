#include "logion/sat.hpp"
#include "logion/tableau.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <thread>

using namespace logion;
using logion::testing::random_formula;

namespace {

bool sat(const std::string& text) { return check_sat(parse(text)).sat(); }

}  // namespace

TEST(CheckSat, Goldens) {
  EXPECT_FALSE(sat("G p & F !p"));
  EXPECT_TRUE(sat("G p & F q"));
  EXPECT_FALSE(sat("false"));
  EXPECT_TRUE(sat("true"));
  EXPECT_FALSE(sat("p & !p"));
  EXPECT_FALSE(sat("G F p & F G !p"));
  EXPECT_TRUE(sat("G F p & G F !p"));
  EXPECT_FALSE(sat("(p U q) & G !q"));
  EXPECT_TRUE(sat("(p W q) & G !q"));
  EXPECT_FALSE(sat("X X p & G !p"));
  EXPECT_TRUE(sat("G (p -> X !p) & G (!p -> X p)"));
}

TEST(CheckSat, MinePumpConflict) {
  auto q = parse("G((p & X p) -> X X !h) & G(h -> X p) & G(m -> X !p) & G(h & m)");
  EXPECT_FALSE(check_sat(q).sat());
  EXPECT_FALSE(check_sat(parse("G((p & X p) -> X X !h) & G(h -> X p) & G(m -> X !p) & F(h & m)")).sat());
}

TEST(CheckSat, WitnessValidates) {
  for (auto text : {"G F p & G F !p", "p U (q & X !p)", "F G (p & !q) & X q", "(p R q) & F !p"}) {
    auto f = parse(text);
    auto r = check_sat(f);
    ASSERT_TRUE(r.sat()) << text;
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(eval_on_lasso(f, *r.witness)) << text;
    EXPECT_GT(r.stats.states_built, 0U);
  }
  EXPECT_FALSE(check_sat(parse("G p & F !p")).witness);
}

TEST(CheckSat, ResourceLimitIsNotUnsat) {
  SatConfig tiny;
  tiny.max_states = 1;
  EXPECT_THROW(check_sat(parse("G F p & G F q & G F r & G (p -> X (q U r))"), {}, tiny), ResourceLimit);
}

TEST(CheckSat, Determinism) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 300; ++i) {
    auto f = random_formula(rng, 12);
    auto a = check_sat(f);
    auto b = check_sat(f);
    ASSERT_EQ(a.verdict, b.verdict);
    ASSERT_EQ(a.witness, b.witness);
  }
}

TEST(CheckSat, ContradictionIsUnsat) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto f = random_formula(rng, 12);
    ASSERT_FALSE(check_sat(make_and(f, make_not(f))).sat()) << print(f);
  }
}

TEST(CheckSat, ReleaseDuality) {
  std::mt19937_64 rng(12);
  SatChecker checker;
  for (int i = 0; i < 300; ++i) {
    auto a = random_formula(rng, 5);
    auto b = random_formula(rng, 5);
    auto r = Formula::binary(Op::Release, a, b);
    auto d = make_not(Formula::binary(Op::Until, make_not(a), make_not(b)));
    ASSERT_EQ(checker.satisfiable(r), checker.satisfiable(d));
    ASSERT_TRUE(checker.equivalent(r, d));
  }
}

TEST(CheckSat, AgreesWithBoundedOracle) {
  std::mt19937_64 rng(13);
  logion::testing::GenOptions o;
  o.vars = {"a", "b", "c"};
  Vocabulary vocab{"a", "b", "c"};
  int models = 0;
  for (int i = 0; i < 1000; ++i) {
    auto f = random_formula(rng, 12, o);
    auto r = check_sat(f, vocab);
    if (r.sat()) {
      ASSERT_TRUE(eval_on_lasso(f, *r.witness)) << print(f);
    }
    if (auto m = bounded_sat(f, vocab, 4, 4)) {
      ++models;
      ASSERT_TRUE(eval_on_lasso(f, *m)) << print(f);
      ASSERT_TRUE(r.sat()) << print(f);
    }
  }
  EXPECT_GT(models, 100);
}

TEST(BoundedSat, Goldens) {
  auto m = bounded_sat(parse("p"), {"p"}, 1, 1);
  ASSERT_TRUE(m);
  EXPECT_TRUE(m->prefix.empty());
  EXPECT_EQ(m->loop, (std::vector<State>{{"p"}}));
  for (std::size_t b = 1; b <= 3; ++b) EXPECT_FALSE(bounded_sat(parse("false"), {"p"}, b, b));
  auto hm = bounded_sat(parse("F(h & m)"), {"h", "m"}, 2, 2);
  ASSERT_TRUE(hm);
  bool found = false;
  for (std::size_t i = 0; i < hm->length(); ++i) found |= hm->state(i) == State{"h", "m"};
  EXPECT_TRUE(found);
  EXPECT_TRUE(eval_on_lasso(parse("F(h & m)"), *hm));
}

TEST(BoundedSat, ShortestFirst) {
  // Two distinct positions are needed, so no one-state lasso qualifies.
  auto m = bounded_sat(parse("!p & X p"), {"p"}, 3, 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length(), 2U);
  EXPECT_FALSE(bounded_sat(parse("G p & F !p"), {"p"}, 4, 4));
}

TEST(SatChecker, ImplicationGoldens) {
  SatChecker c;
  auto bc1 = parse("G(h & m)");
  auto bc2 = parse("F(h & m)");
  EXPECT_TRUE(c.implies(bc1, bc2));
  EXPECT_FALSE(c.implies(bc2, bc1));
  EXPECT_FALSE(c.equivalent(bc1, bc2));
  EXPECT_TRUE(c.equivalent(parse("G (p | q)"), parse("!(true U !(p | q))")));
}

TEST(SatChecker, RandomReflexivityAndWeakUntilIdentity) {
  std::mt19937_64 rng(14);
  SatChecker c;
  for (int i = 0; i < 200; ++i) {
    auto a = random_formula(rng, 8);
    ASSERT_TRUE(c.implies(a, a));
    ASSERT_TRUE(c.equivalent(Formula::binary(Op::WeakUntil, a, Formula::constant(false)), Formula::unary(Op::Always, a)));
  }
}

TEST(SatChecker, CacheHitsAndEviction) {
  SatConfig config;
  config.cache_capacity = 2;
  SatChecker c(config);
  auto a = parse("G p");
  c.check(a);
  c.check(a);
  auto s = c.cache_stats();
  EXPECT_EQ(s.hits, 1U);
  EXPECT_EQ(s.misses, 1U);
  c.check(parse("F p"));
  c.check(parse("X p"));
  EXPECT_EQ(c.cache_stats().entries, 2U);
  c.check(a);
  EXPECT_EQ(c.cache_stats().misses, 4U);
}

TEST(SatChecker, ConcurrentUse) {
  SatChecker c;
  std::mt19937_64 rng(15);
  std::vector<Formula> fs;
  for (int i = 0; i < 100; ++i) fs.push_back(random_formula(rng, 10));
  std::vector<bool> expected;
  for (const auto& f : fs) expected.push_back(check_sat(f).sat());
  std::vector<std::vector<bool>> got(4);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t)
      threads.emplace_back([&, t] {
        for (const auto& f : fs) got[t].push_back(c.satisfiable(f));
      });
  }
  for (const auto& g : got) EXPECT_EQ(g, expected);
}

TEST(Tableau, NegationNormalForm) {
  auto nnf = tableau::negation_normal_form(parse("!(G p -> F q)"));
  std::function<void(const Formula&)> check = [&](const Formula& f) {
    EXPECT_NE(f.op(), Op::Always);
    EXPECT_NE(f.op(), Op::Eventually);
    EXPECT_NE(f.op(), Op::Implies);
    EXPECT_NE(f.op(), Op::WeakUntil);
    if (f.op() == Op::Not) {
      EXPECT_EQ(f.lhs().op(), Op::Var);
    }
    for (int i = 0; i < f.arity(); ++i) check(f.child(i));
  };
  check(nnf);
  SatChecker c;
  EXPECT_TRUE(c.equivalent(nnf, parse("!(G p -> F q)")));
}

TEST(Tableau, GraphInvariants) {
  auto g = tableau::build_tableau(parse("G (p -> X q) & F p & (r U q)"));
  ASSERT_FALSE(g.nodes.empty());
  EXPECT_EQ(g.fulfilling.size(), g.eventualities.size());
  for (const auto& e : g.edges) {
    ASSERT_LT(e.from, g.nodes.size());
    ASSERT_LT(e.to, g.nodes.size());
    for (const auto& v : e.positive) EXPECT_FALSE(e.negative.contains(v));
    for (auto i : e.postponed) EXPECT_LT(i, g.eventualities.size());
  }
}
