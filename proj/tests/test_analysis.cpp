#include "logion/analysis.hpp"
#include "logion/treedist.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace logion;
using logion::testing::brute_force_similarity;
using logion::testing::random_formula;

namespace {

std::vector<Formula> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (auto t : texts) out.push_back(parse(t));
  return out;
}

std::set<std::string> keys(const std::vector<CorpusEntry>& entries) {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(canonical_key(e.formula));
  return out;
}

void expect_matches_brute_force(const std::vector<Formula>& fs) {
  auto r = similarity_report(fs);
  auto b = brute_force_similarity(fs);
  EXPECT_EQ(r.total, fs.size());
  EXPECT_EQ(r.pct_bc_delta, b.pct_bc_delta);
  EXPECT_EQ(r.num_sim_delta, b.num_sim_delta);
  EXPECT_EQ(r.pct_bc_norm, b.pct_bc_norm);
  EXPECT_EQ(r.num_sim_norm, b.num_sim_norm);
  EXPECT_EQ(r.avg_min, b.avg_min);
}

}  // namespace

TEST(Dedup, Syntactic) {
  auto c = dedup(parse_all({"G(h & m)", "G(h & m)"}), DedupMode::Syntactic);
  EXPECT_EQ(c.entries.size(), 1U);
  auto d = dedup(parse_all({"G(h & m)", "F(h & m)"}), DedupMode::Syntactic);
  EXPECT_EQ(d.entries.size(), 2U);
}

TEST(Dedup, Semantic) {
  SatChecker sat;
  auto c = dedup(parse_all({"!F !(h & m)", "G(h & m)"}), DedupMode::Semantic, &sat);
  ASSERT_EQ(c.entries.size(), 1U);
  EXPECT_EQ(c.entries[0].formula, parse("G(h & m)"));
  auto d = dedup(parse_all({"G(h & m)", "F(h & m)"}), DedupMode::Semantic, &sat);
  EXPECT_EQ(d.entries.size(), 2U);
  // Equal sizes: the lexicographically smaller key represents the class.
  auto e = dedup(parse_all({"(b & a)", "(a & b)"}), DedupMode::Semantic, &sat);
  ASSERT_EQ(e.entries.size(), 1U);
  EXPECT_EQ(print(e.entries[0].formula), "(a & b)");
}

TEST(Dedup, KeepsSourceMetadata) {
  std::vector<CorpusEntry> raw{{parse("a"), "r1", std::chrono::milliseconds(5), 2, false},
                               {parse("a"), "r2", std::chrono::milliseconds(1), 1, false}};
  auto c = dedup(raw, DedupMode::Syntactic);
  ASSERT_EQ(c.entries.size(), 1U);
  EXPECT_EQ(c.entries[0].source, "r1");
}

TEST(MostGeneral, Goldens) {
  SatChecker sat;
  auto pi = most_general_set(dedup(parse_all({"G(h & m)", "F(h & m)"}), DedupMode::Syntactic), sat);
  EXPECT_EQ(keys(pi.members), (std::set<std::string>{"F (h & m)"}));
  EXPECT_FALSE(pi.approximate);
  auto single = most_general_set(dedup(parse_all({"X p"}), DedupMode::Syntactic), sat);
  EXPECT_EQ(keys(single.members), (std::set<std::string>{"X p"}));
  auto three = most_general_set(dedup(parse_all({"G p", "G q", "F p"}), DedupMode::Syntactic), sat);
  EXPECT_EQ(keys(three.members), (std::set<std::string>{"G q", "F p"}));
}

TEST(MostGeneral, CollapsesEquivalentToSmallest) {
  SatChecker sat;
  auto pi = most_general_set(dedup(parse_all({"!G !p", "G p", "F p"}), DedupMode::Syntactic), sat);
  EXPECT_EQ(keys(pi.members), (std::set<std::string>{"F p"}));
}

// Matrix reference: collapse classes to their smallest member, keep the
// classes no other class strictly dominates.
TEST(MostGeneral, MatchesPairwiseMatrixOnRandomCorpora) {
  std::mt19937_64 rng(50);
  SatChecker sat;
  for (int round = 0; round < 40; ++round) {
    std::vector<Formula> raw;
    for (int i = 0; i < 8; ++i) raw.push_back(random_formula(rng, 6, {{"p", "q"}, false, false}));
    auto corpus = dedup(raw, DedupMode::Syntactic);
    const auto& es = corpus.entries;
    auto n = es.size();
    std::vector<std::vector<bool>> imp(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) imp[i][j] = sat.implies(es[i].formula, es[j].formula);
    auto better = [&](std::size_t i, std::size_t j) {
      auto a = es[i].formula.size(), b = es[j].formula.size();
      return a != b ? a < b : canonical_key(es[i].formula) < canonical_key(es[j].formula);
    };
    std::set<std::string> expected;
    for (std::size_t i = 0; i < n; ++i) {
      bool representative = true, dominated = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        if (imp[i][j] && imp[j][i] && better(j, i)) representative = false;
        if (imp[i][j] && !imp[j][i]) dominated = true;
      }
      if (representative && !dominated) expected.insert(canonical_key(es[i].formula));
    }
    auto pi = most_general_set(corpus, sat);
    ASSERT_FALSE(pi.approximate);
    ASSERT_EQ(keys(pi.members), expected) << "round " << round;
    for (const auto& e : es) {
      bool covered = false;
      for (const auto& m : pi.members) covered |= sat.implies(e.formula, m.formula);
      ASSERT_TRUE(covered);
    }
  }
}

TEST(Similarity, PairAndSingleton) {
  auto r = similarity_report(parse_all({"G(h & m)", "F(h & m)"}));
  EXPECT_DOUBLE_EQ(r.pct_bc_delta[1], 100.0);
  EXPECT_DOUBLE_EQ(r.num_sim_delta[1], 1.0);
  ASSERT_TRUE(r.avg_min);
  EXPECT_DOUBLE_EQ(*r.avg_min, 1.0);
  auto s = similarity_report(parse_all({"G(h & m)"}));
  for (int l : kDeltaThresholds) {
    EXPECT_EQ(s.pct_bc_delta[l], 0.0);
    EXPECT_EQ(s.num_sim_delta[l], 0.0);
  }
  EXPECT_FALSE(s.avg_min);
}

TEST(Similarity, FiveFormulaCorpusByHand) {
  // The first three differ pairwise by one or two relabels; the last two are
  // far from everything.
  auto fs = parse_all({"G(h & m)", "F(h & m)", "G(h | m)", "X X X p", "h U (m R p)"});
  expect_matches_brute_force(fs);
  auto r = similarity_report(fs);
  EXPECT_EQ(formula_distance(fs[0], fs[1]), 1U);
  EXPECT_EQ(formula_distance(fs[1], fs[2]), 2U);
  EXPECT_DOUBLE_EQ(r.pct_bc_delta[1], 60.0);
  EXPECT_DOUBLE_EQ(r.num_sim_delta[1], 4.0 / 5.0);
}

TEST(Similarity, RandomCorporaMatchBruteForceAndAreMonotone) {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 30; ++round) {
    std::vector<Formula> raw;
    for (int i = 0; i < 10; ++i) raw.push_back(random_formula(rng, 6, {{"h", "m"}}));
    auto corpus = dedup(raw, DedupMode::Syntactic);
    std::vector<Formula> fs;
    for (const auto& e : corpus.entries) fs.push_back(e.formula);
    expect_matches_brute_force(fs);
    auto r = similarity_report(corpus);
    for (int t = 0; t + 1 < 3; ++t) {
      ASSERT_LE(r.pct_bc_delta[kDeltaThresholds[t]], r.pct_bc_delta[kDeltaThresholds[t + 1]]);
      ASSERT_LE(r.num_sim_delta[kDeltaThresholds[t]], r.num_sim_delta[kDeltaThresholds[t + 1]]);
      ASSERT_LE(r.pct_bc_norm[kNormTenths[t]], r.pct_bc_norm[kNormTenths[t + 1]]);
      ASSERT_LE(r.num_sim_norm[kNormTenths[t]], r.num_sim_norm[kNormTenths[t + 1]]);
    }
    for (const auto& [l, v] : r.pct_bc_delta) ASSERT_TRUE(v >= 0 && v <= 100);
    if (r.total >= 2) {
      ASSERT_GE(*r.avg_min, 1.0);
    }
  }
}

TEST(Consecutive, Goldens) {
  auto r = consecutive_similarity(parse_all({"G(h & m)", "F(h & m)"}));
  ASSERT_TRUE(r);
  EXPECT_DOUBLE_EQ(r->first, 1.0);
  EXPECT_DOUBLE_EQ(r->second, 0.125);
  EXPECT_FALSE(consecutive_similarity(parse_all({"G(h & m)"})));
}

TEST(Report, JsonAndCsv) {
  auto r = similarity_report(parse_all({"G(h & m)", "F(h & m)"}));
  auto j = to_json(r);
  for (auto field : {"total", "pct_bc_delta", "num_sim_delta", "pct_bc_norm", "num_sim_norm", "avg_min"})
    EXPECT_NE(j.find(field), std::string::npos) << field;
  auto csv = to_csv(r, "MP");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "case,%BC(d<=1),%BC(d<=2),%BC(d<=3),#sim(d<=1),#sim(d<=2),#sim(d<=3),%BC(D<=0.1),%BC(D<=0.2),"
            "%BC(D<=0.3),#sim(D<=0.1),#sim(D<=0.2),#sim(D<=0.3),avg min,#total");
  EXPECT_EQ(csv.substr(csv.find('\n') + 1),
            "MP,100.000,100.000,100.000,1.000,1.000,1.000,0.000,100.000,100.000,0.000,1.000,1.000,1.000,2\n");
}
