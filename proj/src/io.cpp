#include "logion/io.hpp"

#include "logion/parser.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace logion {

using nlohmann::ordered_json;

namespace {

const ordered_json& field(const ordered_json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(where + ": missing field '" + name + "'");
  return j.at(name);
}

template <typename T>
T get(const ordered_json& j, const char* name, const std::string& where) {
  try {
    return field(j, name, where).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw FormatError(where + ": field '" + name + "' has the wrong type");
  }
}

Formula parse_field(const std::string& text, const std::string& where) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

std::vector<NamedFormula> named_list(const ordered_json& j, const char* name, const std::string& where) {
  std::vector<NamedFormula> out;
  if (!j.contains(name)) return out;
  const auto& list = j.at(name);
  if (!list.is_array()) throw FormatError(where + ": '" + name + "' must be a list");
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto here = where + "." + name + "[" + std::to_string(i) + "]";
    auto label = get<std::string>(list[i], "name", here);
    out.push_back({label, parse_field(get<std::string>(list[i], "formula", here), here)});
  }
  return out;
}

ordered_json parse_json(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(what + " is not valid JSON: " + e.what());
  }
}

Specification spec_from(const ordered_json& j) {
  Specification s;
  s.name = get<std::string>(j, "name", "spec");
  if (j.contains("variables")) {
    for (const auto& v : get<std::vector<std::string>>(j, "variables", "spec")) {
      if (!is_identifier(v)) throw FormatError("spec: invalid variable name '" + v + "'");
      s.declared.insert(v);
    }
  }
  s.domains = named_list(j, "domains", "spec");
  s.goals = named_list(j, "goals", "spec");
  if (s.goals.empty()) throw FormatError("spec: at least one goal is required");
  return s;
}

ordered_json spec_json(const Specification& s) {
  ordered_json j;
  j["name"] = s.name;
  j["variables"] = s.vocabulary();
  auto list = [](const std::vector<NamedFormula>& items) {
    auto a = ordered_json::array();
    for (const auto& i : items) a.push_back({{"name", i.name}, {"formula", print(i.formula)}});
    return a;
  };
  j["domains"] = list(s.domains);
  j["goals"] = list(s.goals);
  return j;
}

}  // namespace

Specification spec_from_json(const std::string& text) { return spec_from(parse_json(text, "spec")); }

std::string spec_to_json(const Specification& spec) { return spec_json(spec).dump(2) + "\n"; }

Specification load_spec(const std::filesystem::path& path) { return spec_from_json(read_file(path)); }

ResultFile make_result_file(const Specification& spec, const SearchConfig& config, const PortfolioResult& result) {
  ResultFile r;
  r.spec = spec;
  r.k = config.k;
  r.tabu = config.tabu_tenure;
  r.seed = config.seed;
  r.cutoff_ms = config.cutoff.count();
  for (std::size_t run = 0; run < result.runs.size(); ++run) {
    for (const auto& bc : result.runs[run].bcs) {
      const auto& c = bc.candidate;
      ResultBc out;
      out.formula = print(c.formula);
      out.li = c.li;
      for (const auto& m : c.min_vector) out.min_vector.push_back(m.str());
      out.nt = c.nt.str();
      out.size_term = c.size_term.str();
      out.score = c.score.str();
      out.size = c.formula.size();
      out.discovery_ms = bc.discovery.count();
      out.iteration = bc.iteration;
      out.run = run;
      r.bcs.push_back(std::move(out));
    }
  }
  r.summary.bc_count = result.merged.size();
  r.summary.t_fbc_ms = result.mean_time_to_first_ms;
  r.summary.s_bbc = result.smallest_bc;
  r.summary.success = result.successes > 0;
  r.summary.runs = result.runs.size();
  r.summary.successful_runs = result.successes;
  r.summary.mean_bc = result.mean_bc;
  return r;
}

std::string result_to_json(const ResultFile& r) {
  ordered_json j;
  j["spec"] = spec_json(r.spec);
  j["config"] = {{"k", r.k}, {"tabu", r.tabu}, {"seed", r.seed}, {"cutoff_ms", r.cutoff_ms}};
  auto bcs = ordered_json::array();
  for (const auto& b : r.bcs) {
    bcs.push_back({{"formula", b.formula},
                   {"li", b.li},
                   {"min", b.min_vector},
                   {"nt", b.nt},
                   {"size_term", b.size_term},
                   {"score", b.score},
                   {"size", b.size},
                   {"iteration", b.iteration},
                   {"run", b.run},
                   {"discovery_ms", b.discovery_ms}});
  }
  j["bcs"] = bcs;
  ordered_json s;
  s["bc_count"] = r.summary.bc_count;
  s["t_fbc_ms"] = r.summary.t_fbc_ms ? ordered_json(*r.summary.t_fbc_ms) : ordered_json(nullptr);
  s["s_bbc"] = r.summary.s_bbc ? ordered_json(*r.summary.s_bbc) : ordered_json(nullptr);
  s["success"] = r.summary.success;
  s["runs"] = r.summary.runs;
  s["successful_runs"] = r.summary.successful_runs;
  s["mean_bc"] = r.summary.mean_bc;
  j["summary"] = s;
  return j.dump(2) + "\n";
}

ResultFile result_from_json(const std::string& text) {
  auto j = parse_json(text, "result file");
  ResultFile r;
  r.spec = spec_from(field(j, "spec", "result"));
  const auto& c = field(j, "config", "result");
  r.k = get<std::size_t>(c, "k", "result.config");
  r.tabu = get<std::size_t>(c, "tabu", "result.config");
  r.seed = get<std::uint64_t>(c, "seed", "result.config");
  r.cutoff_ms = get<std::int64_t>(c, "cutoff_ms", "result.config");
  const auto& bcs = field(j, "bcs", "result");
  if (!bcs.is_array()) throw FormatError("result: 'bcs' must be a list");
  for (std::size_t i = 0; i < bcs.size(); ++i) {
    auto where = "result.bcs[" + std::to_string(i) + "]";
    ResultBc b;
    b.formula = get<std::string>(bcs[i], "formula", where);
    parse_field(b.formula, where);
    b.li = get<int>(bcs[i], "li", where);
    b.min_vector = get<std::vector<std::string>>(bcs[i], "min", where);
    b.nt = get<std::string>(bcs[i], "nt", where);
    b.size_term = get<std::string>(bcs[i], "size_term", where);
    b.score = get<std::string>(bcs[i], "score", where);
    b.size = get<std::size_t>(bcs[i], "size", where);
    b.iteration = get<std::size_t>(bcs[i], "iteration", where);
    b.run = get<std::size_t>(bcs[i], "run", where);
    b.discovery_ms = get<std::int64_t>(bcs[i], "discovery_ms", where);
    r.bcs.push_back(std::move(b));
  }
  const auto& s = field(j, "summary", "result");
  r.summary.bc_count = get<std::size_t>(s, "bc_count", "result.summary");
  if (!field(s, "t_fbc_ms", "result.summary").is_null()) r.summary.t_fbc_ms = get<double>(s, "t_fbc_ms", "result.summary");
  if (!field(s, "s_bbc", "result.summary").is_null()) r.summary.s_bbc = get<std::size_t>(s, "s_bbc", "result.summary");
  r.summary.success = get<bool>(s, "success", "result.summary");
  r.summary.runs = get<std::size_t>(s, "runs", "result.summary");
  r.summary.successful_runs = get<std::size_t>(s, "successful_runs", "result.summary");
  r.summary.mean_bc = get<double>(s, "mean_bc", "result.summary");
  return r;
}

ResultFile load_result(const std::filesystem::path& path) { return result_from_json(read_file(path)); }

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace logion
