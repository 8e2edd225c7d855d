#include "logion/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>
#include <unordered_set>

namespace logion {

void SearchConfig::validate() const {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (cutoff.count() < 0) throw std::invalid_argument("cutoff must not be negative");
  if (sat_call_budget && sat_call_budget->count() <= 0) throw std::invalid_argument("SAT budget must be positive");
}

SatConfig SearchConfig::sat_config() const {
  auto c = sat_config_from_env();
  if (sat_call_budget) c.time_budget = *sat_call_budget;
  return c;
}

std::string trace_line(const IterationRecord& r) {
  nlohmann::ordered_json j;
  j["iteration"] = r.iteration;
  j["current"] = r.current;
  j["score"] = r.score.str();
  j["evaluated"] = r.evaluated;
  j["bcs"] = r.bcs_found;
  j["elapsed_us"] = r.elapsed.count();
  return j.dump();
}

SearchResult run_search(const Specification& spec, const SearchConfig& config, std::ostream* trace_out) {
  SatChecker sat(config.sat_config());
  return run_search(spec, config, sat, trace_out);
}

SearchResult run_search(const Specification& spec, const SearchConfig& config, SatChecker& sat, std::ostream* trace_out) {
  spec.validate();
  config.validate();
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed = [&] { return std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - start); };

  const auto vocabulary = spec.vocabulary();
  const auto trivial = trivial_condition(spec);
  std::mt19937_64 rng(config.seed);
  TabuMemory tabu(config.tabu_tenure);
  SearchResult result;
  std::unordered_set<std::string> harvested;

  auto current = trivial;
  auto current_score = evaluate(current, spec, sat).score;
  record_visit(tabu, current);
  std::size_t stagnant = 0;

  for (std::size_t iteration = 1;; ++iteration) {
    if (elapsed() >= config.cutoff) break;
    if (config.max_iterations && iteration > *config.max_iterations) break;

    auto candidates = sample_neighbors(current, config.k, vocabulary, rng, config.neighborhood);
    if (config.max_formula_size)
      std::erase_if(candidates, [&](const Formula& f) { return f.size() > *config.max_formula_size; });
    candidates = filter_tabu(candidates, tabu);

    std::vector<ScoredCandidate> scored;
    scored.reserve(candidates.size());
    for (const auto& c : candidates) {
      scored.push_back(evaluate(c, spec, sat));
      const auto& s = scored.back();
      result.sat_calls += s.sat_calls;
      if (s.budget_exhausted) ++result.budget_exhausted;
      if (s.is_bc && harvested.insert(canonical_key(s.formula)).second) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed());
        result.bcs.push_back({s, ms, iteration});
      }
    }

    bool worse = true;
    if (!scored.empty()) {
      auto best = std::max_element(scored.begin(), scored.end(),
                                   [](const auto& a, const auto& b) { return a.score < b.score; })->score;
      std::vector<std::size_t> ties;
      for (std::size_t i = 0; i < scored.size(); ++i)
        if (scored[i].score == best) ties.push_back(i);
      std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
      const auto& chosen = scored[ties[pick(rng)]];
      worse = chosen.score < current_score;
      current = chosen.formula;
      current_score = chosen.score;
    }
    record_visit(tabu, current);

    if (config.stagnation_restart) {
      stagnant = worse ? stagnant + 1 : 0;
      if (stagnant >= config.stagnation_limit) {
        current = trivial;
        current_score = evaluate(current, spec, sat).score;
        stagnant = 0;
        ++result.restarts;
      }
    }

    IterationRecord record{iteration, canonical_key(current), current_score, scored.size(), result.bcs.size(), elapsed()};
    if (trace_out) *trace_out << trace_line(record) << '\n';
    result.trace.iterations.push_back(std::move(record));
  }

  result.trace.bcs = result.bcs;
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed());
  return result;
}

PortfolioResult run_portfolio(const Specification& spec, const SearchConfig& config, std::size_t runs,
                              std::size_t threads) {
  if (runs == 0) throw std::invalid_argument("runs must be at least 1");
  spec.validate();
  config.validate();
  PortfolioResult out;
  out.runs.resize(runs);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(runs);
  auto worker = [&] {
    for (std::size_t i; (i = next++) < runs;) {
      auto c = config;
      c.seed = config.seed + i;
      try {
        out.runs[i] = run_search(spec, c);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::clamp<std::size_t>(threads, 1, runs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::unordered_set<std::string> seen;
  double total_bcs = 0;
  double total_first = 0;
  for (const auto& run : out.runs) {
    total_bcs += static_cast<double>(run.bcs.size());
    if (!run.bcs.empty()) {
      ++out.successes;
      total_first += static_cast<double>(run.bcs.front().discovery.count());
    }
    for (const auto& bc : run.bcs) {
      auto size = bc.candidate.formula.size();
      if (!out.smallest_bc || size < *out.smallest_bc) out.smallest_bc = size;
      if (seen.insert(canonical_key(bc.candidate.formula)).second) out.merged.push_back(bc);
    }
  }
  out.mean_bc = total_bcs / static_cast<double>(runs);
  if (out.successes) out.mean_time_to_first_ms = total_first / static_cast<double>(out.successes);
  return out;
}

}  // namespace logion
