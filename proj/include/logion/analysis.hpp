#pragma once

#include "logion/rational.hpp"
#include "logion/sat.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace logion {

struct CorpusEntry {
  Formula formula;
  std::string source;
  std::optional<std::chrono::milliseconds> discovery;
  std::optional<std::size_t> iteration;
  /// An equivalence check involving this entry ran out of budget.
  bool flagged = false;
};

/// Boundary conditions with pairwise distinct canonical keys.
struct BcCorpus {
  std::vector<CorpusEntry> entries;
};

enum class DedupMode { Syntactic, Semantic };

/// Syntactic: first occurrence per key. Semantic: additionally merges
/// equivalent entries into the smallest one (ties: smaller key). `sat` is only
/// used in semantic mode.
BcCorpus dedup(const std::vector<CorpusEntry>& raw, DedupMode mode, SatChecker* sat = nullptr);
BcCorpus dedup(const std::vector<Formula>& raw, DedupMode mode, SatChecker* sat = nullptr);

struct GeneralitySet {
  std::vector<CorpusEntry> members;
  /// Some implication check was inconclusive and treated as "no implication".
  bool approximate = false;
};

/// Maximal elements of the implication order after collapsing equivalent
/// entries. Every corpus entry implies some member.
GeneralitySet most_general_set(const BcCorpus& corpus, SatChecker& sat);

/// Distance thresholds: delta <= 1, 2, 3 and normalized <= 0.1, 0.2, 0.3.
inline constexpr int kDeltaThresholds[] = {1, 2, 3};
inline constexpr int kNormTenths[] = {1, 2, 3};

struct SimilarityReport {
  std::size_t total = 0;
  std::map<int, double> pct_bc_delta;   // keyed by l
  std::map<int, double> num_sim_delta;
  std::map<int, double> pct_bc_norm;    // keyed by tenths: 1 -> 0.1
  std::map<int, double> num_sim_norm;
  std::optional<double> avg_min;        // absent when total < 2
};

/// Each entry is compared with every other entry, never with itself.
SimilarityReport similarity_report(const BcCorpus& corpus);
SimilarityReport similarity_report(const std::vector<Formula>& formulas);

/// Means of delta and normalized distance over consecutive discoveries;
/// absent for fewer than two.
std::optional<std::pair<double, double>> consecutive_similarity(const std::vector<Formula>& discoveries);

std::string to_json(const SimilarityReport& report);
/// Header plus one row in the column order %BC(d<=1..3), #sim(d<=1..3),
/// %BC(D<=0.1..0.3), #sim(D<=0.1..0.3), avg min, #total.
std::string to_csv(const SimilarityReport& report, const std::string& label);

}  // namespace logion
