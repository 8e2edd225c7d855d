#pragma once

#include "logion/formula.hpp"
#include "logion/lasso.hpp"

#include <chrono>
#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace logion {

/// A satisfiability query ran out of its state or time budget. The verdict is
/// unknown; it is never reported as UNSAT.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { Sat, Unsat };

struct SatStats {
  std::size_t states_built = 0;
  std::size_t transitions = 0;
  std::chrono::microseconds elapsed{0};
};

struct SatResult {
  Verdict verdict = Verdict::Unsat;
  std::optional<LassoTrace> witness;  // present iff Sat
  SatStats stats;

  bool sat() const noexcept { return verdict == Verdict::Sat; }
};

struct SatConfig {
  std::size_t max_states = std::size_t{1} << 20;
  std::chrono::milliseconds time_budget{10'000};
  /// Memoized verdicts kept by SatChecker; 0 disables the cache.
  std::size_t cache_capacity = 100'000;
};

/// Default configuration with the time budget taken from LOGION_SAT_BUDGET_MS
/// when that variable is set.
SatConfig sat_config_from_env();

/// Decides satisfiability with an on-the-fly tableau and generalized Büchi
/// emptiness check; on SAT the witness lasso is validated before returning.
/// Throws ResourceLimit when the budget is exhausted.
SatResult check_sat(const Formula& f, const Vocabulary& vocabulary = {}, const SatConfig& config = {});

/// Exhaustive search over lassos with |prefix| <= max_prefix and
/// 1 <= |loop| <= max_loop, in order of total length, then prefix length, then
/// lexicographically on state bitmasks (bit i = i-th vocabulary variable).
/// Returns the first model, or nothing; nothing does not imply UNSAT.
std::optional<LassoTrace> bounded_sat(const Formula& f, const Vocabulary& vocabulary, std::size_t max_prefix,
                                      std::size_t max_loop);

/// Satisfiability service with a bounded LRU cache keyed by canonical_key.
/// Safe to share between threads.
class SatChecker {
public:
  explicit SatChecker(SatConfig config = {});

  SatResult check(const Formula& f);
  bool satisfiable(const Formula& f) { return check(f).sat(); }
  /// a |= b, i.e. a & !b is UNSAT.
  bool implies(const Formula& a, const Formula& b);
  bool equivalent(const Formula& a, const Formula& b);

  const SatConfig& config() const noexcept { return config_; }

  struct CacheStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t entries = 0;
  };
  CacheStats cache_stats() const;

private:
  SatConfig config_;
  mutable std::mutex mutex_;
  std::list<std::pair<std::string, SatResult>> lru_;
  std::unordered_map<std::string, std::list<std::pair<std::string, SatResult>>::iterator> index_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// Free-function forms over a shared checker.
inline bool implies(SatChecker& sat, const Formula& a, const Formula& b) { return sat.implies(a, b); }
inline bool equivalent(SatChecker& sat, const Formula& a, const Formula& b) { return sat.equivalent(a, b); }

}  // namespace logion
