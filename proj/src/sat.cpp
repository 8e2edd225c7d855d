#include "logion/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_set>

namespace logion {

SatConfig sat_config_from_env() {
  SatConfig config;
  if (const char* value = std::getenv("LOGION_SAT_BUDGET_MS")) {
    char* end = nullptr;
    auto ms = std::strtoll(value, &end, 10);
    if (end != value && *end == '\0' && ms > 0) config.time_budget = std::chrono::milliseconds(ms);
  }
  return config;
}

SatChecker::SatChecker(SatConfig config) : config_(config) {}

SatResult SatChecker::check(const Formula& f) {
  if (config_.cache_capacity == 0) return check_sat(f, {}, config_);
  auto key = canonical_key(f);
  {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      lru_.splice(lru_.end(), lru_, it->second);
      ++hits_;
      return it->second->second;
    }
    ++misses_;
  }
  // Computed outside the lock; two threads may race on the same key, which
  // only costs duplicated work since the result is deterministic.
  auto result = check_sat(f, {}, config_);
  std::lock_guard lock(mutex_);
  if (!index_.contains(key)) {
    lru_.emplace_back(key, result);
    index_.emplace(std::move(key), std::prev(lru_.end()));
    if (lru_.size() > config_.cache_capacity) {
      index_.erase(lru_.front().first);
      lru_.pop_front();
    }
  }
  return result;
}

bool SatChecker::implies(const Formula& a, const Formula& b) { return !satisfiable(make_and(a, make_not(b))); }

bool SatChecker::equivalent(const Formula& a, const Formula& b) { return implies(a, b) && implies(b, a); }

SatChecker::CacheStats SatChecker::cache_stats() const {
  std::lock_guard lock(mutex_);
  return {hits_, misses_, lru_.size()};
}

namespace {

// Brute-force lasso oracle. Subformulae are numbered in postorder so a truth
// vector for one position fits in a 64-bit mask; vectors for a prefix position
// follow from its state and the vector of the position after it.
class BoundedOracle {
public:
  BoundedOracle(const Formula& f, const Vocabulary& vocabulary) {
    auto vars = vocabulary;
    vars.merge(variables(f));
    vars_.assign(vars.begin(), vars.end());
    if (vars_.size() > 16) throw std::invalid_argument("bounded_sat: too many variables");
    root_ = number(f);
  }

  std::size_t state_count() const { return std::size_t{1} << vars_.size(); }
  std::uint64_t root_bit() const { return std::uint64_t{1} << root_; }

  std::uint64_t step(std::uint32_t state, std::uint64_t next) const {
    std::uint64_t cur = 0;
    for (std::size_t i = 0; i < subs_.size(); ++i)
      if (value(subs_[i], state, cur, next, i)) cur |= std::uint64_t{1} << i;
    return cur;
  }

  // Vector at the first loop position of the infinite repetition of `loop`.
  std::uint64_t loop_vector(const std::vector<std::uint32_t>& loop) const {
    auto l = loop.size();
    std::vector<std::uint64_t> vec(l, 0);
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      const auto& s = subs_[i];
      auto bit = std::uint64_t{1} << i;
      bool greatest = s.op == Op::Always || s.op == Op::Release || s.op == Op::WeakUntil;
      if (greatest)
        for (auto& v : vec) v |= bit;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = l; p-- > 0;) {
          bool now = value(s, loop[p], vec[p], vec[(p + 1) % l], i);
          if (now != bool(vec[p] & bit)) {
            vec[p] ^= bit;
            changed = true;
          }
        }
      }
    }
    return vec[0];
  }

  State decode(std::uint32_t mask) const {
    State s;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (mask >> i & 1U) s.insert(vars_[i]);
    return s;
  }

private:
  struct Sub {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;  // variable index for Op::Var
  };

  std::uint32_t number(const Formula& f) {
    auto key = canonical_key(f);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    Sub s{f.op()};
    if (f.op() == Op::Var) {
      s.b = static_cast<std::uint32_t>(std::lower_bound(vars_.begin(), vars_.end(), f.name()) - vars_.begin());
    } else if (f.arity() >= 1) {
      s.a = number(f.lhs());
      if (f.arity() == 2) s.b = number(f.rhs());
    }
    if (subs_.size() == 64) throw std::invalid_argument("bounded_sat: more than 64 distinct subformulae");
    auto id = static_cast<std::uint32_t>(subs_.size());
    subs_.push_back(s);
    ids_.emplace(std::move(key), id);
    return id;
  }

  static bool bit(std::uint64_t v, std::uint32_t i) { return v >> i & 1U; }

  bool value(const Sub& s, std::uint32_t state, std::uint64_t cur, std::uint64_t next, std::size_t self) const {
    auto me = static_cast<std::uint32_t>(self);
    switch (s.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Var: return state >> s.b & 1U;
    case Op::Not: return !bit(cur, s.a);
    case Op::Next: return bit(next, s.a);
    case Op::And: return bit(cur, s.a) && bit(cur, s.b);
    case Op::Or: return bit(cur, s.a) || bit(cur, s.b);
    case Op::Implies: return !bit(cur, s.a) || bit(cur, s.b);
    case Op::Eventually: return bit(cur, s.a) || bit(next, me);
    case Op::Always: return bit(cur, s.a) && bit(next, me);
    case Op::Until:
    case Op::WeakUntil: return bit(cur, s.b) || (bit(cur, s.a) && bit(next, me));
    case Op::Release: return bit(cur, s.b) && (bit(cur, s.a) || bit(next, me));
    }
    return false;
  }

  std::vector<std::string> vars_;
  std::vector<Sub> subs_;
  std::map<std::string, std::uint32_t> ids_;
  std::uint32_t root_ = 0;
};

struct LoopTable {
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> sequences;  // lexicographic order
  std::vector<std::unordered_set<std::uint64_t>> layers;  // layers[m]: vectors at prefix length m
};

}  // namespace

std::optional<LassoTrace> bounded_sat(const Formula& f, const Vocabulary& vocabulary, std::size_t max_prefix,
                                      std::size_t max_loop) {
  BoundedOracle oracle(f, vocabulary);
  const auto n_states = static_cast<std::uint32_t>(oracle.state_count());
  std::vector<LoopTable> tables(max_loop + 1);

  auto table = [&](std::size_t l) -> LoopTable& {
    auto& t = tables[l];
    if (t.layers.empty()) {
      std::vector<std::uint32_t> seq(l, 0);
      std::unordered_set<std::uint64_t> base;
      while (true) {
        auto v = oracle.loop_vector(seq);
        t.sequences.emplace_back(seq, v);
        base.insert(v);
        std::size_t i = l;
        while (i > 0 && ++seq[i - 1] == n_states) seq[--i] = 0;
        if (i == 0) break;
      }
      t.layers.push_back(std::move(base));
    }
    return t;
  };
  auto layer = [&](std::size_t l, std::size_t m) -> const std::unordered_set<std::uint64_t>& {
    auto& t = table(l);
    while (t.layers.size() <= m) {
      std::unordered_set<std::uint64_t> next;
      for (auto v : t.layers.back())
        for (std::uint32_t s = 0; s < n_states; ++s) next.insert(oracle.step(s, v));
      t.layers.push_back(std::move(next));
    }
    return t.layers[m];
  };

  for (std::size_t total = 1; total <= max_prefix + max_loop; ++total) {
    for (std::size_t p = 0; p <= std::min(max_prefix, total - 1); ++p) {
      auto l = total - p;
      if (l > max_loop) continue;
      std::unordered_set<std::uint64_t> target;
      for (auto v : layer(l, p))
        if (v & oracle.root_bit()) target.insert(v);
      if (target.empty()) continue;

      LassoTrace trace;
      for (std::size_t i = 0; i < p; ++i) {
        const auto& later = layer(l, p - i - 1);
        for (std::uint32_t s = 0; s < n_states; ++s) {
          std::unordered_set<std::uint64_t> narrowed;
          for (auto v : later)
            if (target.contains(oracle.step(s, v))) narrowed.insert(v);
          if (!narrowed.empty()) {
            trace.prefix.push_back(oracle.decode(s));
            target = std::move(narrowed);
            break;
          }
        }
      }
      for (const auto& [seq, v] : table(l).sequences) {
        if (!target.contains(v)) continue;
        for (auto s : seq) trace.loop.push_back(oracle.decode(s));
        return trace;
      }
      throw std::logic_error("bounded_sat: inconsistent reconstruction");
    }
  }
  return std::nullopt;
}

}  // namespace logion
