#pragma once

#include "logion/neighborhood.hpp"
#include "logion/objective.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace logion {

struct SearchConfig {
  std::size_t k = 50;
  std::size_t tabu_tenure = 4;
  std::chrono::milliseconds cutoff{60'000};
  std::uint64_t seed = 0;
  /// Per-query satisfiability budget; defaults to sat_config_from_env().
  std::optional<std::chrono::milliseconds> sat_call_budget;
  /// Sampled neighbors larger than this are dropped before evaluation.
  std::optional<std::size_t> max_formula_size;
  /// Stop after this many iterations even if time remains.
  std::optional<std::size_t> max_iterations;
  /// Reset to the trivial condition after `stagnation_limit` consecutive
  /// iterations that were empty or moved to a worse formula.
  bool stagnation_restart = false;
  std::size_t stagnation_limit = 500;
  NeighborhoodOptions neighborhood;

  /// Throws std::invalid_argument on k == 0 or a negative cutoff.
  void validate() const;
  SatConfig sat_config() const;
};

struct IterationRecord {
  std::size_t iteration = 0;
  std::string current;      // canonical key of the formula moved to
  Rational score;
  std::size_t evaluated = 0;
  std::size_t bcs_found = 0;
  std::chrono::microseconds elapsed{0};
};

struct BcRecord {
  ScoredCandidate candidate;
  std::chrono::milliseconds discovery{0};
  std::size_t iteration = 0;
};

struct SearchTrace {
  std::vector<IterationRecord> iterations;
  std::vector<BcRecord> bcs;  // discovery order, unique keys
};

struct SearchResult {
  std::vector<BcRecord> bcs;
  SearchTrace trace;
  std::size_t sat_calls = 0;
  std::size_t budget_exhausted = 0;  // candidates with an unknown query
  std::size_t restarts = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Tabu walk from the trivial condition. When `trace_out` is set, one JSON
/// object per iteration is written to it.
SearchResult run_search(const Specification& spec, const SearchConfig& config, std::ostream* trace_out = nullptr);
SearchResult run_search(const Specification& spec, const SearchConfig& config, SatChecker& sat,
                        std::ostream* trace_out = nullptr);

/// JSON line for one iteration; `elapsed_us` is the only timing field.
std::string trace_line(const IterationRecord& record);

struct PortfolioResult {
  std::vector<SearchResult> runs;  // in seed order
  std::vector<BcRecord> merged;    // unique keys, first discovery wins
  std::size_t successes = 0;
  double mean_bc = 0;
  std::optional<double> mean_time_to_first_ms;  // over successful runs
  std::optional<std::size_t> smallest_bc;       // S_BBC
};

/// Independent runs with seeds seed, seed + 1, ...; each run owns its
/// satisfiability cache so results do not depend on scheduling.
PortfolioResult run_portfolio(const Specification& spec, const SearchConfig& config, std::size_t runs,
                              std::size_t threads = 1);

}  // namespace logion
