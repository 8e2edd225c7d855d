#include "logion/cases.hpp"
#include "logion/cli.hpp"
#include "logion/io.hpp"
#include "logion/objective.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace logion;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("logion-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  fs::path dir;
};

const char* kMinePumpJson = R"x({
  "name": "minepump",
  "domains": [{"name": "Dom", "formula": "G((p & X p) -> X X !h)"}],
  "goals": [{"name": "G1", "formula": "G(h -> X p)"}, {"name": "G2", "formula": "G(m -> X !p)"}]
})x";

}  // namespace

TEST(SpecJson, RoundTripAndErrors) {
  auto s = spec_from_json(kMinePumpJson);
  EXPECT_EQ(s.name, "minepump");
  ASSERT_EQ(s.goals.size(), 2U);
  EXPECT_EQ(s.goals[1].formula, parse("G(m -> X !p)"));
  EXPECT_EQ(s.vocabulary(), (Vocabulary{"h", "m", "p"}));
  auto again = spec_from_json(spec_to_json(s));
  EXPECT_EQ(again.name, s.name);
  EXPECT_EQ(again.domains[0].formula, s.domains[0].formula);
  EXPECT_EQ(again.goals[0].formula, s.goals[0].formula);

  EXPECT_THROW(spec_from_json("{"), FormatError);
  EXPECT_THROW(spec_from_json(R"({"name":"x","domains":[],"goals":[]})"), FormatError);
  try {
    spec_from_json(R"({"name":"x","goals":[{"name":"g","formula":"G (a &"}]})");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("goals[0]"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("1:"), std::string::npos) << e.what();
  }
  auto declared = spec_from_json(R"({"name":"x","variables":["a","z"],"goals":[{"name":"g","formula":"G a"}]})");
  EXPECT_EQ(declared.vocabulary(), (Vocabulary{"a", "z"}));
}

TEST(ResultJson, RoundTrip) {
  auto mp = logion::testing::minepump();
  SearchConfig config;
  config.seed = 4;
  config.max_iterations = 20;
  config.cutoff = std::chrono::minutes(5);
  auto p = run_portfolio(mp, config, 2);
  auto file = make_result_file(mp, config, p);
  std::size_t per_run = 0;
  for (const auto& run : p.runs) per_run += run.bcs.size();
  EXPECT_EQ(file.bcs.size(), per_run);
  EXPECT_EQ(file.summary.bc_count, p.merged.size());
  EXPECT_EQ(file.summary.runs, 2U);
  auto text = result_to_json(file);
  auto back = result_from_json(text);
  EXPECT_EQ(result_to_json(back), text);
  for (const auto& bc : back.bcs) EXPECT_TRUE(verify_bc(parse(bc.formula), back.spec).is_bc()) << bc.formula;
  EXPECT_THROW(result_from_json(R"({"spec": 3})"), FormatError);
}

TEST_F(TempDir, AtomicWrite) {
  write_atomically(path("a.txt"), "one");
  write_atomically(path("a.txt"), "two");
  EXPECT_EQ(read_file(path("a.txt")), "two");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1U);
}

TEST(Cases, ManifestsMatch) {
  ASSERT_GE(bundled_cases().size(), 10U);
  for (const auto& c : bundled_cases()) {
    EXPECT_NO_THROW(c.spec.validate()) << c.id;
    EXPECT_EQ(c.spec.domains.size(), c.manifest.domains) << c.id;
    EXPECT_EQ(c.spec.goals.size(), c.manifest.goals) << c.id;
    EXPECT_EQ(c.spec.vocabulary().size(), c.manifest.variables) << c.id;
    EXPECT_FALSE(c.provenance.empty()) << c.id;
    auto reparsed = spec_from_json(spec_to_json(c.spec));
    EXPECT_EQ(reparsed.goals.size(), c.spec.goals.size());
  }
  const auto* mp = find_case("MP");
  ASSERT_NE(mp, nullptr);
  EXPECT_EQ(mp->manifest.domains, 1U);
  EXPECT_EQ(mp->manifest.goals, 2U);
  EXPECT_EQ(mp->manifest.variables, 3U);
  const auto* las = find_case("las");
  ASSERT_NE(las, nullptr);
  EXPECT_EQ(las->spec.domains.size(), 0U);
  EXPECT_EQ(las->spec.goals.size(), 5U);
  EXPECT_EQ(las->spec.vocabulary().size(), 7U);
  EXPECT_EQ(find_case("nope"), nullptr);
  EXPECT_FALSE(missing_cases().empty());
}

TEST(Cases, KnownBcsVerify) {
  for (const auto& c : bundled_cases()) {
    if (!c.known_bc) continue;
    EXPECT_TRUE(verify_bc(parse(*c.known_bc), c.spec).is_bc()) << c.id << ": " << *c.known_bc;
  }
}

TEST(Cli, Distance) {
  auto r = run_cli({"distance", "G(h -> X p)", "G(h & m)"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "δ=3 Δ=0.333\n");
  EXPECT_EQ(run_cli({"distance", "G(h & m)", "F(h & m)"}).out, "δ=1 Δ=0.125\n");
  EXPECT_EQ(run_cli({"distance", "p U q", "p U q"}).out, "δ=0 Δ=0.000\n");
  EXPECT_EQ(run_cli({"distance", "G(", "p"}).code, cli::kInputError);
}

TEST(Cli, Check) {
  auto ok = run_cli({"check", "minepump", "F(h & m)"});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_NE(ok.out.find("BC: yes"), std::string::npos);
  auto trivial = run_cli({"check", "minepump", "!(G(h -> X p) & G(m -> X !p))"});
  EXPECT_EQ(trivial.code, cli::kNoResult);
  EXPECT_NE(trivial.out.find("non-triviality: no"), std::string::npos);
  auto bottom = run_cli({"check", "minepump", "false"});
  EXPECT_EQ(bottom.code, cli::kNoResult);
  EXPECT_NE(bottom.out.find("minimality without G1: no"), std::string::npos);
  EXPECT_EQ(run_cli({"check", "minepump", "G(h &"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"check", "/no/such/file.json", "p"}).code, cli::kInputError);
}

TEST_F(TempDir, SearchExitCodes) {
  write("mp.json", kMinePumpJson);
  write("broken.json", R"({"name": "x", "goals": [{"name": "g", "formula": "G (a &"}]})");
  auto zero = run_cli({"search", path("mp.json"), "--time", "0", "--out", path("zero.json")});
  EXPECT_EQ(zero.code, cli::kNoResult);
  EXPECT_TRUE(load_result(path("zero.json")).bcs.empty());
  EXPECT_EQ(run_cli({"search", path("broken.json")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"search", path("mp.json"), "--k", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({"search", path("mp.json"), "--bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run_cli({}).code, cli::kUsageError);
}

TEST_F(TempDir, SearchThenAnalyze) {
  write("mp.json", kMinePumpJson);
  auto a = run_cli({"search", path("mp.json"), "--time", "60", "--max-iterations", "15", "--seed", "1", "--out",
                    path("a.json"), "--trace", path("a.trace")});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  auto b = run_cli({"search", "minepump", "--time", "60", "--max-iterations", "15", "--seed", "2", "--out",
                    path("b.json")});
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  auto ra = load_result(path("a.json"));
  auto rb = load_result(path("b.json"));
  for (const auto& bc : ra.bcs) EXPECT_EQ(run_cli({"check", path("mp.json"), bc.formula}).code, cli::kOk);

  std::ifstream trace(path("a.trace"));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(trace, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["iteration"].get<std::size_t>(), ++lines);
  }
  EXPECT_EQ(lines, 15U);

  auto report = run_cli({"analyze", path("a.json"), path("b.json"), "--pi", "--similarity"});
  ASSERT_EQ(report.code, cli::kOk) << report.err;
  auto j = nlohmann::json::parse(report.out);
  std::set<std::string> keys;
  for (const auto& bc : ra.bcs) keys.insert(bc.formula);
  for (const auto& bc : rb.bcs) keys.insert(bc.formula);
  EXPECT_EQ(j["corpus"].get<std::size_t>(), keys.size());
  EXPECT_EQ(j["raw"].get<std::size_t>(), ra.bcs.size() + rb.bcs.size());
  EXPECT_FALSE(j["pi"].empty());
  EXPECT_TRUE(j.contains("similarity"));

  auto csv = run_cli({"analyze", path("a.json"), "--similarity", "--format", "csv"});
  ASSERT_EQ(csv.code, cli::kOk);
  EXPECT_EQ(csv.out.rfind("case,%BC(d<=1)", 0), 0U);
  EXPECT_EQ(run_cli({"analyze", path("a.json"), "--format", "xml"}).code, cli::kUsageError);
}

TEST_F(TempDir, AnalyzePiOnHandWrittenCorpus) {
  auto s = logion::testing::minepump();
  ResultFile r;
  r.spec = s;
  for (auto text : {"G (h & m)", "F (h & m)"}) {
    ResultBc bc;
    bc.formula = text;
    r.bcs.push_back(bc);
  }
  write("pair.json", result_to_json(r));
  // G(h & m) does not re-verify against this domain, so verification is skipped.
  EXPECT_EQ(run_cli({"analyze", path("pair.json"), "--pi"}).code, cli::kInputError);
  auto out = run_cli({"analyze", path("pair.json"), "--pi", "--no-verify"});
  ASSERT_EQ(out.code, cli::kOk) << out.err;
  auto j = nlohmann::json::parse(out.out);
  EXPECT_EQ(j["pi"], nlohmann::json::array({"F (h & m)"}));
}

TEST_F(TempDir, AnalyzeRejectsMalformed) {
  write("bad.json", "{\"spec\": {}}");
  EXPECT_EQ(run_cli({"analyze", path("bad.json")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"analyze", path("missing.json")}).code, cli::kInputError);
}

TEST_F(TempDir, CasesWrite) {
  auto r = run_cli({"cases", "--write", path("cases")});
  ASSERT_EQ(r.code, cli::kOk);
  for (const auto& c : bundled_cases()) {
    auto loaded = load_spec(dir / "cases" / (c.id + ".json"));
    EXPECT_EQ(loaded.goals.size(), c.spec.goals.size());
    EXPECT_NE(r.out.find(c.id), std::string::npos);
  }
}
