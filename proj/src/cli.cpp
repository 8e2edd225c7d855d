#include "logion/cli.hpp"

#include "logion/analysis.hpp"
#include "logion/cases.hpp"
#include "logion/io.hpp"
#include "logion/parser.hpp"
#include "logion/treedist.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

namespace logion::cli {

namespace {

namespace fs = std::filesystem;

// Spec argument: a JSON file, or the id of a bundled case.
Specification resolve_spec(const std::string& arg) {
  if (!fs::exists(arg))
    if (const auto* c = find_case(arg)) return c->spec;
  return load_spec(arg);
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct SearchArgs {
  std::string spec;
  double time_s = 60;
  std::size_t k = 50;
  std::size_t tabu = 4;
  std::uint64_t seed = 0;
  std::size_t runs = 1;
  std::size_t threads = 1;
  std::string out;
  std::string trace;
  std::size_t max_iterations = 0;
  std::size_t max_size = 0;
  bool restart = false;
  std::int64_t sat_budget_ms = 0;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  Specification spec;
  try {
    spec = resolve_spec(a.spec);
    spec.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  SearchConfig config;
  config.k = a.k;
  config.tabu_tenure = a.tabu;
  config.cutoff = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_s * 1000.0));
  config.seed = a.seed;
  if (a.max_iterations) config.max_iterations = a.max_iterations;
  if (a.max_size) config.max_formula_size = a.max_size;
  if (a.sat_budget_ms) config.sat_call_budget = std::chrono::milliseconds(a.sat_budget_ms);
  config.stagnation_restart = a.restart;
  try {
    config.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  auto result = run_portfolio(spec, config, a.runs, a.threads);
  auto file = make_result_file(spec, config, result);
  if (!a.out.empty()) write_atomically(a.out, result_to_json(file));
  if (!a.trace.empty()) {
    for (std::size_t r = 0; r < result.runs.size(); ++r) {
      std::string lines;
      for (const auto& rec : result.runs[r].trace.iterations) lines += trace_line(rec) + '\n';
      auto path = result.runs.size() == 1 ? a.trace : a.trace + ".run" + std::to_string(r);
      write_atomically(path, lines);
    }
  }

  out << "spec: " << spec.name << '\n';
  out << "runs: " << result.runs.size() << ", successful: " << result.successes << '\n';
  out << "BCs (unique): " << result.merged.size() << ", mean per run: " << fixed3(result.mean_bc) << '\n';
  if (result.mean_time_to_first_ms) out << "T_FBC: " << fixed3(*result.mean_time_to_first_ms / 1000.0) << " s\n";
  if (result.smallest_bc) out << "S_BBC: " << *result.smallest_bc << '\n';
  std::vector<const BcRecord*> best;
  for (const auto& bc : result.merged) best.push_back(&bc);
  std::stable_sort(best.begin(), best.end(), [](const BcRecord* x, const BcRecord* y) {
    return x->candidate.formula.size() < y->candidate.formula.size();
  });
  for (std::size_t i = 0; i < std::min<std::size_t>(5, best.size()); ++i)
    out << "  " << print(best[i]->candidate.formula) << '\n';
  return result.merged.empty() ? kNoResult : kOk;
}

int cmd_check(const std::string& spec_arg, const std::string& text, std::ostream& out, std::ostream& err) {
  Specification spec;
  Formula phi;
  try {
    spec = resolve_spec(spec_arg);
    spec.validate();
    phi = parse(text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  auto v = verify_bc(phi, spec);
  out << "formula: " << print(phi) << '\n';
  out << "logical inconsistency: " << yes(v.inconsistency) << '\n';
  for (std::size_t i = 0; i < spec.goals.size(); ++i)
    out << "minimality without " << spec.goals[i].name << ": " << yes(v.minimality[i]) << '\n';
  out << "non-triviality: " << yes(v.non_triviality) << '\n';
  if (v.budget_exhausted) out << "note: a satisfiability query exceeded its budget\n";
  out << "BC: " << yes(v.is_bc()) << '\n';
  return v.is_bc() ? kOk : kNoResult;
}

int cmd_distance(const std::string& a, const std::string& b, std::ostream& out, std::ostream& err) {
  Formula fa, fb;
  try {
    fa = parse(a);
    fb = parse(b);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  auto d = formula_distance(fa, fb);
  out << "δ=" << d << " Δ=" << fixed3(normalized_distance(d, fa.size(), fb.size()).to_double()) << '\n';
  return kOk;
}

struct AnalyzeArgs {
  std::vector<std::string> results;
  bool pi = false;
  bool similarity = false;
  bool semantic = false;
  bool verify = true;
  std::string format = "json";
  std::string out;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<CorpusEntry> raw;
  std::vector<std::vector<Formula>> sequences;  // per file and run, discovery order
  for (const auto& path : a.results) {
    ResultFile file;
    try {
      file = load_result(path);
    } catch (const std::exception& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      return kInputError;
    }
    std::map<std::size_t, std::vector<Formula>> runs;
    for (const auto& bc : file.bcs) {
      auto f = parse(bc.formula);
      if (a.verify && !verify_bc(f, file.spec).is_bc()) {
        err << "error: " << path << ": listed BC does not re-verify: " << bc.formula << '\n';
        return kInputError;
      }
      raw.push_back({f, path, std::chrono::milliseconds(bc.discovery_ms), bc.iteration, false});
      runs[bc.run].push_back(f);
    }
    for (auto& [run, seq] : runs) sequences.push_back(std::move(seq));
  }

  SatChecker sat(sat_config_from_env());
  auto corpus = dedup(raw, a.semantic ? DedupMode::Semantic : DedupMode::Syntactic, &sat);

  nlohmann::ordered_json report;
  report["files"] = a.results;
  report["raw"] = raw.size();
  report["corpus"] = corpus.entries.size();
  std::string csv;

  if (a.pi) {
    auto pi = most_general_set(corpus, sat);
    auto list = nlohmann::ordered_json::array();
    for (const auto& m : pi.members) list.push_back(print(m.formula));
    report["pi"] = list;
    report["pi_approximate"] = pi.approximate;
    if (a.format == "csv") {
      csv += "most_general\n";
      for (const auto& m : pi.members) csv += "\"" + print(m.formula) + "\"\n";
    }
  }
  if (a.similarity) {
    auto r = similarity_report(corpus);
    report["similarity"] = nlohmann::ordered_json::parse(to_json(r));
    double sum_delta = 0, sum_norm = 0, pairs = 0;
    for (const auto& seq : sequences) {
      if (auto c = consecutive_similarity(seq)) {
        auto n = static_cast<double>(seq.size() - 1);
        sum_delta += c->first * n;
        sum_norm += c->second * n;
        pairs += n;
      }
    }
    if (pairs > 0) report["consecutive"] = {{"mean_delta", sum_delta / pairs}, {"mean_norm", sum_norm / pairs}};
    else report["consecutive"] = nullptr;
    if (a.format == "csv") {
      auto label = corpus.entries.empty() ? std::string("corpus") : std::string(fs::path(a.results.front()).stem());
      csv = to_csv(r, label) + csv;
    }
  }

  std::string text = a.format == "csv" ? csv : report.dump(2) + "\n";
  if (a.out.empty()) out << text;
  else write_atomically(a.out, text);
  return kOk;
}

int cmd_cases(const std::string& write_dir, std::ostream& out, std::ostream& err) {
  if (!write_dir.empty()) {
    std::error_code ec;
    fs::create_directories(write_dir, ec);
    if (ec) {
      err << "error: cannot create " << write_dir << ": " << ec.message() << '\n';
      return kInputError;
    }
    for (const auto& c : bundled_cases()) write_atomically(fs::path(write_dir) / (c.id + ".json"), spec_to_json(c.spec));
  }
  out << "id        #Dom #Goal #Var size(ours/published)  verified BC\n";
  for (const auto& c : bundled_cases()) {
    char line[160];
    std::snprintf(line, sizeof line, "%-9s %4zu %5zu %4zu %6zu/%-9zu  %s\n", c.id.c_str(), c.spec.domains.size(),
                  c.spec.goals.size(), c.spec.vocabulary().size(), c.computed_size(), c.manifest.published_size,
                  c.known_bc ? c.known_bc->c_str() : "-");
    out << line;
  }
  for (const auto& m : missing_cases()) out << m.id << ": absent (" << m.reason << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary-condition search for LTL goal specifications", "logion"};
  app.require_subcommand(1);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Run the tabu search on a specification");
  search->add_option("spec", sa.spec, "Specification JSON file or bundled case id")->required();
  search->add_option("--time", sa.time_s, "Cutoff per run in seconds")->check(CLI::NonNegativeNumber);
  search->add_option("--k", sa.k, "Sampled neighbors per step")->check(CLI::PositiveNumber);
  search->add_option("--tabu", sa.tabu, "Tabu tenure");
  search->add_option("--seed", sa.seed, "Random seed (run i uses seed + i)");
  search->add_option("--runs", sa.runs, "Independent runs")->check(CLI::PositiveNumber);
  search->add_option("--threads", sa.threads, "Runs executed in parallel")->check(CLI::PositiveNumber);
  search->add_option("--out", sa.out, "Result file to write");
  search->add_option("--trace", sa.trace, "JSON-lines trace file");
  search->add_option("--max-iterations", sa.max_iterations, "Stop after this many iterations (0 = unlimited)");
  search->add_option("--max-size", sa.max_size, "Drop neighbors larger than this (0 = no cap)");
  search->add_flag("--restart", sa.restart, "Restart from the trivial condition after 500 stagnant steps");
  search->add_option("--sat-budget-ms", sa.sat_budget_ms, "Per-query satisfiability budget")->check(CLI::PositiveNumber);

  std::string check_spec, check_formula;
  auto* check = app.add_subcommand("check", "Check whether a formula is a boundary condition");
  check->add_option("spec", check_spec, "Specification JSON file or bundled case id")->required();
  check->add_option("formula", check_formula, "Candidate formula")->required();

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Merge result files and report generality and similarity");
  analyze->add_option("results", aa.results, "Result files")->required();
  analyze->add_flag("--pi", aa.pi, "Most general boundary conditions");
  analyze->add_flag("--similarity", aa.similarity, "Structural similarity statistics");
  analyze->add_flag("--semantic-dedup", aa.semantic, "Merge logically equivalent entries");
  analyze->add_flag("!--no-verify", aa.verify, "Skip re-verification of listed BCs");
  analyze->add_option("--format", aa.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", aa.out, "Write the report here instead of stdout");

  std::string da, db;
  auto* distance = app.add_subcommand("distance", "Tree edit distance between two formulae");
  distance->add_option("a", da)->required();
  distance->add_option("b", db)->required();

  std::string write_dir;
  auto* cases = app.add_subcommand("cases", "List bundled cases");
  cases->add_option("--write", write_dir, "Write each bundled specification to DIR/<id>.json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*search) return cmd_search(sa, out, err);
    if (*check) return cmd_check(check_spec, check_formula, out, err);
    if (*analyze) return cmd_analyze(aa, out, err);
    if (*distance) return cmd_distance(da, db, out, err);
    if (*cases) return cmd_cases(write_dir, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}

}  // namespace logion::cli
