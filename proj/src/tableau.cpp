#include "logion/tableau.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace logion {

namespace {

class BitSet {
public:
  BitSet() = default;
  explicit BitSet(std::size_t bits, bool value = false)
      : words_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    if (value && bits % 64) words_.back() = (std::uint64_t{1} << (bits % 64)) - 1;
  }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  bool subset_of(const BitSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  BitSet& operator&=(const BitSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend bool operator==(const BitSet& a, const BitSet& b) { return a.words_ == b.words_; }
  friend bool operator<(const BitSet& a, const BitSet& b) {
    return std::lexicographical_compare(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
  }

private:
  boost::container::small_vector<std::uint64_t, 4> words_;
};

enum class Kind : std::uint8_t { True, False, Lit, And, Or, Next, Until, Release };

struct NnfNode {
  Kind kind;
  bool negated;
  std::uint32_t a;  // literal: variable index; otherwise first operand
  std::uint32_t b;
};

constexpr std::uint32_t kTrue = 0;
constexpr std::uint32_t kFalse = 1;

// Hash-consed NNF nodes. Every Until node owns an eventuality index.
class NnfStore {
public:
  explicit NnfStore(const Vocabulary& vars) : names_(vars.begin(), vars.end()) {
    for (std::uint32_t i = 0; i < names_.size(); ++i) var_index_.emplace(names_[i], i);
    intern({Kind::True, false, 0, 0});
    intern({Kind::False, false, 0, 0});
  }

  const NnfNode& node(std::uint32_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t variable_count() const { return names_.size(); }
  const std::string& variable(std::uint32_t i) const { return names_[i]; }
  std::size_t eventuality_count() const { return untils_.size(); }
  std::uint32_t eventuality(std::size_t index) const { return untils_[index]; }
  std::size_t eventuality_index(std::uint32_t id) const { return until_index_.at(id); }

  std::uint32_t lit(std::uint32_t var, bool negated) { return intern({Kind::Lit, negated, var, 0}); }

  std::uint32_t conj(std::uint32_t a, std::uint32_t b) {
    if (a == kFalse || b == kFalse) return kFalse;
    if (a == kTrue) return b;
    if (b == kTrue || a == b) return a;
    if (complementary(a, b)) return kFalse;
    if (a > b) std::swap(a, b);
    return intern({Kind::And, false, a, b});
  }

  std::uint32_t disj(std::uint32_t a, std::uint32_t b) {
    if (a == kTrue || b == kTrue) return kTrue;
    if (a == kFalse) return b;
    if (b == kFalse || a == b) return a;
    if (complementary(a, b)) return kTrue;
    if (a > b) std::swap(a, b);
    return intern({Kind::Or, false, a, b});
  }

  std::uint32_t next(std::uint32_t a) {
    if (a == kTrue || a == kFalse) return a;
    return intern({Kind::Next, false, a, 0});
  }

  std::uint32_t until(std::uint32_t a, std::uint32_t b) {
    if (b == kTrue || b == kFalse) return b;
    if (a == kFalse || a == b) return b;
    return intern({Kind::Until, false, a, b});
  }

  std::uint32_t release(std::uint32_t a, std::uint32_t b) {
    if (b == kTrue || b == kFalse) return b;
    if (a == kTrue || a == b) return b;
    return intern({Kind::Release, false, a, b});
  }

  std::uint32_t translate(const Formula& f, bool negate) {
    auto key = std::make_pair(f.identity(), negate);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint32_t id = 0;
    switch (f.op()) {
    case Op::True: id = negate ? kFalse : kTrue; break;
    case Op::False: id = negate ? kTrue : kFalse; break;
    case Op::Var: id = lit(var_index_.at(f.name()), negate); break;
    case Op::Not: id = translate(f.lhs(), !negate); break;
    case Op::Next: id = next(translate(f.lhs(), negate)); break;
    case Op::And:
      id = negate ? disj(translate(f.lhs(), true), translate(f.rhs(), true))
                  : conj(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
    case Op::Or:
      id = negate ? conj(translate(f.lhs(), true), translate(f.rhs(), true))
                  : disj(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
    case Op::Implies:
      id = negate ? conj(translate(f.lhs(), false), translate(f.rhs(), true))
                  : disj(translate(f.lhs(), true), translate(f.rhs(), false));
      break;
    case Op::Always:  // G a = false R a
      id = negate ? until(kTrue, translate(f.lhs(), true)) : release(kFalse, translate(f.lhs(), false));
      break;
    case Op::Eventually:  // F a = true U a
      id = negate ? release(kFalse, translate(f.lhs(), true)) : until(kTrue, translate(f.lhs(), false));
      break;
    case Op::Until:
      id = negate ? release(translate(f.lhs(), true), translate(f.rhs(), true))
                  : until(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
    case Op::Release:
      id = negate ? until(translate(f.lhs(), true), translate(f.rhs(), true))
                  : release(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
    case Op::WeakUntil: {  // a W b = b R (a | b);  !(a W b) = !b U (!a & !b)
      auto a = translate(f.lhs(), negate);
      auto b = translate(f.rhs(), negate);
      id = negate ? until(b, conj(a, b)) : release(b, disj(a, b));
      break;
    }
    }
    memo_.emplace(key, id);
    return id;
  }

  Formula to_formula(std::uint32_t id) const {
    const auto& n = nodes_[id];
    switch (n.kind) {
    case Kind::True: return Formula::constant(true);
    case Kind::False: return Formula::constant(false);
    case Kind::Lit: {
      auto v = Formula::var(names_[n.a]);
      return n.negated ? make_not(v) : v;
    }
    case Kind::And: return make_and(to_formula(n.a), to_formula(n.b));
    case Kind::Or: return make_or(to_formula(n.a), to_formula(n.b));
    case Kind::Next: return Formula::unary(Op::Next, to_formula(n.a));
    case Kind::Until: return Formula::binary(Op::Until, to_formula(n.a), to_formula(n.b));
    case Kind::Release: return Formula::binary(Op::Release, to_formula(n.a), to_formula(n.b));
    }
    return Formula::constant(true);
  }

private:
  bool complementary(std::uint32_t a, std::uint32_t b) const {
    const auto& x = nodes_[a];
    const auto& y = nodes_[b];
    return x.kind == Kind::Lit && y.kind == Kind::Lit && x.a == y.a && x.negated != y.negated;
  }

  std::uint32_t intern(NnfNode n) {
    auto key = (static_cast<std::uint64_t>(n.kind) << 61) | (static_cast<std::uint64_t>(n.negated) << 60) |
               (static_cast<std::uint64_t>(n.a) << 30) | n.b;
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(n);
    table_.emplace(key, id);
    if (n.kind == Kind::Until) {
      until_index_.emplace(id, untils_.size());
      untils_.push_back(id);
    }
    return id;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<const void*, bool>& p) const noexcept {
      return std::hash<const void*>{}(p.first) * 2 + p.second;
    }
  };

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> var_index_;
  std::vector<NnfNode> nodes_;
  std::unordered_map<std::uint64_t, std::uint32_t> table_;
  std::unordered_map<std::pair<const void*, bool>, std::uint32_t, PairHash> memo_;
  std::vector<std::uint32_t> untils_;
  std::unordered_map<std::uint32_t, std::size_t> until_index_;
};

using Obligations = std::vector<std::uint32_t>;  // sorted, unique

struct Transition {
  BitSet positive;
  BitSet negative;
  BitSet postponed;
  Obligations next;
  std::uint32_t target = 0;

  auto key() const { return std::tie(next, positive, negative, postponed); }
};

bool weaker(const Transition& a, const Transition& b) {
  return a.positive.subset_of(b.positive) && a.negative.subset_of(b.negative) &&
         a.postponed.subset_of(b.postponed) &&
         std::includes(b.next.begin(), b.next.end(), a.next.begin(), a.next.end());
}

// Splits a conjunction of obligations into its disjunctive normal form: each
// transition fixes literals for the current position, the obligations for the
// next one, and which untils were deferred rather than discharged.
class Expander {
public:
  explicit Expander(const NnfStore& store) : store_(store) {}

  std::vector<Transition> expand(const Obligations& state) const {
    std::vector<Transition> out;
    std::vector<Branch> stack;
    Branch first{{state.begin(), state.end()},
                 BitSet(store_.size()),
                 BitSet(store_.variable_count()),
                 BitSet(store_.variable_count()),
                 BitSet(store_.eventuality_count()),
                 {}};
    stack.push_back(std::move(first));
    while (!stack.empty()) {
      Branch br = std::move(stack.back());
      stack.pop_back();
      if (run(br, stack)) {
        std::sort(br.next.begin(), br.next.end());
        br.next.erase(std::unique(br.next.begin(), br.next.end()), br.next.end());
        out.push_back({std::move(br.positive), std::move(br.negative), std::move(br.postponed),
                       Obligations(br.next.begin(), br.next.end()), 0});
      }
    }
    std::sort(out.begin(), out.end(), [](const Transition& x, const Transition& y) { return x.key() < y.key(); });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Transition& x, const Transition& y) { return x.key() == y.key(); }),
              out.end());
    // A transition with weaker constraints, fewer obligations and fewer
    // postponements admits every continuation of a stronger one.
    std::vector<char> dominated(out.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (dominated[i]) continue;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (i != j && !dominated[j] && weaker(out[i], out[j])) dominated[j] = 1;
    }
    std::vector<Transition> kept;
    kept.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!dominated[i]) kept.push_back(std::move(out[i]));
    return kept;
  }

private:
  struct Branch {
    boost::container::small_vector<std::uint32_t, 16> todo;
    BitSet done;
    BitSet positive;
    BitSet negative;
    BitSet postponed;
    boost::container::small_vector<std::uint32_t, 16> next;
  };

  // Processes the branch to completion, pushing alternatives onto the stack.
  // Returns false if the branch is contradictory.
  bool run(Branch& br, std::vector<Branch>& stack) const {
    while (!br.todo.empty()) {
      auto id = br.todo.back();
      br.todo.pop_back();
      if (br.done.test(id)) continue;
      br.done.set(id);
      const auto& n = store_.node(id);
      switch (n.kind) {
      case Kind::True:
        break;
      case Kind::False:
        return false;
      case Kind::Lit:
        if (n.negated) {
          if (br.positive.test(n.a)) return false;
          br.negative.set(n.a);
        } else {
          if (br.negative.test(n.a)) return false;
          br.positive.set(n.a);
        }
        break;
      case Kind::And:
        br.todo.push_back(n.a);
        br.todo.push_back(n.b);
        break;
      case Kind::Or: {
        if (holds(br, n.a) || holds(br, n.b)) break;
        bool a_ok = !refuted(br, n.a);
        bool b_ok = !refuted(br, n.b);
        if (!a_ok && !b_ok) return false;
        if (a_ok && b_ok) {
          Branch alt = br;
          alt.todo.push_back(n.b);
          stack.push_back(std::move(alt));
        }
        br.todo.push_back(a_ok ? n.a : n.b);
        break;
      }
      case Kind::Next:
        br.next.push_back(n.a);
        break;
      case Kind::Until: {
        // a U b  =  b | (a & X(a U b))
        if (holds(br, n.b)) break;
        if (refuted(br, n.b)) {
          br.todo.push_back(n.a);
          br.next.push_back(id);
          br.postponed.set(store_.eventuality_index(id));
          break;
        }
        Branch alt = br;
        alt.todo.push_back(n.a);
        alt.next.push_back(id);
        alt.postponed.set(store_.eventuality_index(id));
        stack.push_back(std::move(alt));
        br.todo.push_back(n.b);
        break;
      }
      case Kind::Release:
        // a R b  =  b & (a | X(a R b))
        if (n.a != kFalse) {
          Branch alt = br;
          alt.todo.push_back(n.b);
          alt.next.push_back(id);
          stack.push_back(std::move(alt));
          br.todo.push_back(n.a);
          br.todo.push_back(n.b);
        } else {
          br.todo.push_back(n.b);
          br.next.push_back(id);
        }
        break;
      }
    }
    return true;
  }

  // Already asserted on this branch.
  bool holds(const Branch& br, std::uint32_t id) const {
    if (br.done.test(id)) return true;
    const auto& n = store_.node(id);
    return n.kind == Kind::Lit && (n.negated ? br.negative.test(n.a) : br.positive.test(n.a));
  }

  // A literal contradicting what the branch already fixed.
  bool refuted(const Branch& br, std::uint32_t id) const {
    const auto& n = store_.node(id);
    if (n.kind == Kind::False) return true;
    return n.kind == Kind::Lit && (n.negated ? br.positive.test(n.a) : br.negative.test(n.a));
  }

  const NnfStore& store_;
};

struct ObligationsHash {
  std::size_t operator()(const Obligations& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Lazily built obligation graph shared by the emptiness check and the full
// exploration used for inspection.
class Graph {
public:
  Graph(const Formula& f, const SatConfig& config)
      : store_(variables(f)),
        expander_(store_),
        config_(config),
        start_(std::chrono::steady_clock::now()) {
    auto root = store_.translate(f, false);
    intern(root == kTrue ? Obligations{} : Obligations{root});
  }

  NnfStore& store() { return store_; }
  std::size_t size() const { return states_.size(); }
  const Obligations& obligations(std::uint32_t s) const { return states_[s].obligations; }
  bool expanded(std::uint32_t s) const { return states_[s].expanded; }
  std::size_t transition_count() const { return transitions_; }
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
  }

  const std::vector<Transition>& edges(std::uint32_t s) {
    auto& info = states_[s];
    if (!info.expanded) {
      if (++expansions_ % 32 == 0 && elapsed() > config_.time_budget)
        throw ResourceLimit("satisfiability check exceeded its time budget");
      auto edges = expander_.expand(states_[s].obligations);
      for (auto& e : edges) e.target = intern(e.next);
      transitions_ += edges.size();
      states_[s].edges = std::move(edges);
      states_[s].expanded = true;
    }
    return states_[s].edges;
  }

  bool is_false_root() const { return states_.size() == 1 && states_[0].obligations == Obligations{kFalse}; }

private:
  struct StateInfo {
    Obligations obligations;
    std::vector<Transition> edges;
    bool expanded = false;
  };

  std::uint32_t intern(const Obligations& obligations) {
    if (auto it = index_.find(obligations); it != index_.end()) return it->second;
    if (states_.size() >= config_.max_states)
      throw ResourceLimit("satisfiability check exceeded its state budget");
    auto id = static_cast<std::uint32_t>(states_.size());
    states_.push_back({obligations, {}, false});
    index_.emplace(obligations, id);
    return id;
  }

  NnfStore store_;
  Expander expander_;
  SatConfig config_;
  std::chrono::steady_clock::time_point start_;
  std::vector<StateInfo> states_;
  std::unordered_map<Obligations, std::uint32_t, ObligationsHash> index_;
  std::size_t transitions_ = 0;
  std::size_t expansions_ = 0;
};

struct EdgeRef {
  std::uint32_t from;
  std::size_t index;
};

State letter_of(const NnfStore& store, const Transition& t) {
  State s;
  for (std::uint32_t v = 0; v < store.variable_count(); ++v)
    if (t.positive.test(v)) s.insert(store.variable(v));
  return s;
}

// Shortest edge path from `from` to `to` using only states accepted by `allowed`.
template <typename Allowed>
std::vector<EdgeRef> shortest_path(Graph& g, std::uint32_t from, std::uint32_t to, Allowed allowed) {
  if (from == to) return {};
  std::unordered_map<std::uint32_t, EdgeRef> parent;
  std::deque<std::uint32_t> queue{from};
  parent.emplace(from, EdgeRef{from, 0});
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    if (!g.expanded(s)) continue;
    const auto& edges = g.edges(s);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto d = edges[i].target;
      if (!allowed(d) || parent.contains(d)) continue;
      parent.emplace(d, EdgeRef{s, i});
      if (d == to) {
        std::vector<EdgeRef> path;
        for (auto cur = to; cur != from; cur = parent.at(cur).from) path.push_back(parent.at(cur));
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(d);
    }
  }
  throw std::logic_error("tableau witness construction: target unreachable");
}

// Couvreur-style on-the-fly SCC search. An SCC is accepting when the
// intersection of the postponed-eventuality sets over its internal edges is
// empty, i.e. every eventuality is discharged somewhere on it.
class EmptinessCheck {
public:
  explicit EmptinessCheck(Graph& g) : g_(g) {}

  // Returns the members of an accepting SCC, or empty if none is reachable.
  std::vector<std::uint32_t> run() {
    push(0);
    while (!todo_.empty()) {
      auto& frame = todo_.back();
      auto s = frame.state;
      const auto& edges = g_.edges(s);
      if (frame.next_edge < edges.size()) {
        const auto& e = edges[frame.next_edge++];
        auto d = e.target;
        if (d >= number_.size() || number_[d] == 0) {
          arcs_.push_back(e.postponed);
          push(d);
          continue;
        }
        if (dead_[d]) continue;
        BitSet acc = e.postponed;
        while (roots_.back().number > number_[d]) {
          acc &= roots_.back().acc;
          acc &= arcs_.back();
          roots_.pop_back();
          arcs_.pop_back();
        }
        roots_.back().acc &= acc;
        if (roots_.back().acc.none()) {
          std::vector<std::uint32_t> scc;
          for (auto it = live_.rbegin(); it != live_.rend() && number_[*it] >= roots_.back().number; ++it)
            scc.push_back(*it);
          return scc;
        }
      } else {
        todo_.pop_back();
        if (roots_.back().number == number_[s]) {
          while (!live_.empty() && number_[live_.back()] >= roots_.back().number) {
            dead_[live_.back()] = true;
            live_.pop_back();
          }
          roots_.pop_back();
          arcs_.pop_back();
        }
      }
    }
    return {};
  }

private:
  struct Root {
    std::uint32_t number;
    BitSet acc;
  };
  struct Frame {
    std::uint32_t state;
    std::size_t next_edge;
  };

  void push(std::uint32_t s) {
    if (number_.size() <= s) {
      number_.resize(s + 1, 0);
      dead_.resize(s + 1, false);
    }
    number_[s] = ++counter_;
    roots_.push_back({counter_, BitSet(g_.store().eventuality_count(), true)});
    if (arcs_.size() < roots_.size()) arcs_.push_back(BitSet(g_.store().eventuality_count(), true));
    live_.push_back(s);
    todo_.push_back({s, 0});
  }

  Graph& g_;
  std::uint32_t counter_ = 0;
  std::vector<std::uint32_t> number_;
  std::vector<bool> dead_;
  std::vector<Root> roots_;
  std::vector<BitSet> arcs_;
  std::vector<std::uint32_t> live_;
  std::vector<Frame> todo_;
};

LassoTrace extract_witness(Graph& g, const std::vector<std::uint32_t>& scc) {
  std::vector<char> member(g.size(), 0);
  for (auto s : scc) member[s] = 1;
  auto root = scc.back();  // lowest DFS number: the SCC entry point
  auto in_scc = [&](std::uint32_t s) { return s < member.size() && member[s]; };

  LassoTrace trace;
  for (const auto& ref : shortest_path(g, 0, root, [](std::uint32_t) { return true; }))
    trace.prefix.push_back(letter_of(g.store(), g.edges(ref.from)[ref.index]));

  std::vector<std::uint32_t> ordered(scc.begin(), scc.end());
  std::sort(ordered.begin(), ordered.end());
  std::vector<EdgeRef> internal;
  for (auto s : ordered) {
    const auto& edges = g.edges(s);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (in_scc(edges[i].target)) internal.push_back({s, i});
  }
  auto edge = [&](const EdgeRef& r) -> const Transition& { return g.edges(r.from)[r.index]; };

  std::vector<EdgeRef> cycle;
  auto current = root;
  auto walk_to = [&](std::uint32_t target) {
    for (const auto& ref : shortest_path(g, current, target, in_scc)) cycle.push_back(ref);
    current = target;
  };
  auto take = [&](const EdgeRef& ref) {
    walk_to(ref.from);
    cycle.push_back(ref);
    current = edge(ref).target;
  };

  const auto n_ev = g.store().eventuality_count();
  for (std::size_t u = 0; u < n_ev; ++u) {
    bool needed = std::any_of(internal.begin(), internal.end(),
                              [&](const EdgeRef& r) { return edge(r).postponed.test(u); });
    if (!needed) continue;
    bool covered = std::any_of(cycle.begin(), cycle.end(),
                               [&](const EdgeRef& r) { return !edge(r).postponed.test(u); });
    if (covered) continue;
    auto it = std::find_if(internal.begin(), internal.end(),
                           [&](const EdgeRef& r) { return !edge(r).postponed.test(u); });
    if (it == internal.end()) throw std::logic_error("accepting SCC does not discharge an eventuality");
    take(*it);
  }
  if (cycle.empty()) {
    auto it = std::find_if(internal.begin(), internal.end(), [&](const EdgeRef& r) { return r.from == root; });
    if (it == internal.end()) throw std::logic_error("accepting SCC without internal edges");
    take(*it);
  }
  walk_to(root);
  for (const auto& ref : cycle) trace.loop.push_back(letter_of(g.store(), edge(ref)));
  return trace;
}

}  // namespace

SatResult check_sat(const Formula& f, const Vocabulary& /*vocabulary*/, const SatConfig& config) {
  Graph g(f, config);
  SatResult result;
  if (!g.is_false_root()) {
    auto scc = EmptinessCheck(g).run();
    if (!scc.empty()) {
      result.verdict = Verdict::Sat;
      result.witness = extract_witness(g, scc);
      if (!eval_on_lasso(f, *result.witness))
        throw std::logic_error("tableau produced a witness that does not satisfy " + print(f));
    }
  }
  result.stats.states_built = g.size();
  result.stats.transitions = g.transition_count();
  result.stats.elapsed = g.elapsed();
  return result;
}

namespace tableau {

Formula negation_normal_form(const Formula& f) {
  NnfStore store(variables(f));
  return store.to_formula(store.translate(f, false));
}

TableauGraph build_tableau(const Formula& f, const SatConfig& config) {
  Graph g(f, config);
  TableauGraph out;
  auto& store = g.store();
  for (std::size_t u = 0; u < store.eventuality_count(); ++u)
    out.eventualities.push_back(store.to_formula(store.eventuality(u)));
  out.fulfilling.resize(store.eventuality_count());
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    const auto& edges = g.edges(s);  // may grow the graph; the loop bound re-reads size()
    std::vector<std::size_t> fulfilled;
    for (const auto& t : edges) {
      Edge e;
      e.from = s;
      e.to = t.target;
      for (std::uint32_t v = 0; v < store.variable_count(); ++v) {
        if (t.positive.test(v)) e.positive.insert(store.variable(v));
        if (t.negative.test(v)) e.negative.insert(store.variable(v));
      }
      for (std::size_t u = 0; u < store.eventuality_count(); ++u) {
        if (t.postponed.test(u)) e.postponed.push_back(u);
        else fulfilled.push_back(u);
      }
      out.edges.push_back(std::move(e));
    }
    std::sort(fulfilled.begin(), fulfilled.end());
    fulfilled.erase(std::unique(fulfilled.begin(), fulfilled.end()), fulfilled.end());
    for (auto u : fulfilled) out.fulfilling[u].push_back(s);
  }
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    std::vector<Formula> node;
    for (auto id : g.obligations(s)) node.push_back(store.to_formula(id));
    out.nodes.push_back(std::move(node));
  }
  return out;
}

}  // namespace tableau

}  // namespace logion
