#include "logion/analysis.hpp"

#include "logion/treedist.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace logion {

namespace {

bool smaller(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return canonical_key(a) < canonical_key(b);
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

// Implication queries over a fixed list of formulae. Every model seen for an
// entry is kept; a kept model of a that falsifies b settles a |/= b without a
// satisfiability call. Tri-state: nullopt when the query ran out of budget.
class ImplicationOracle {
public:
  ImplicationOracle(SatChecker& sat, const std::vector<Formula>& items) : sat_(sat), items_(items), models_(items.size()) {}

  std::optional<bool> implies(std::size_t a, std::size_t b) {
    for (const auto& m : models_[a])
      if (!eval_on_lasso(items_[b], m)) return false;
    try {
      auto r = sat_.check(make_and(items_[a], make_not(items_[b])));
      if (!r.sat()) return true;
      models_[a].push_back(*r.witness);
      return false;
    } catch (const ResourceLimit&) {
      return std::nullopt;
    }
  }

private:
  SatChecker& sat_;
  const std::vector<Formula>& items_;
  std::vector<std::vector<LassoTrace>> models_;
};

std::vector<Formula> formulas_of(const std::vector<CorpusEntry>& entries) {
  std::vector<Formula> out;
  for (const auto& e : entries) out.push_back(e.formula);
  return out;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

BcCorpus dedup(const std::vector<CorpusEntry>& raw, DedupMode mode, SatChecker* sat) {
  BcCorpus syntactic;
  std::unordered_set<std::string> seen;
  for (const auto& e : raw)
    if (seen.insert(canonical_key(e.formula)).second) syntactic.entries.push_back(e);
  if (mode == DedupMode::Syntactic) return syntactic;
  if (!sat) throw std::invalid_argument("semantic deduplication needs a satisfiability checker");

  auto& items = syntactic.entries;
  const auto n = items.size();
  UnionFind classes(n);
  const auto formulas = formulas_of(items);
  ImplicationOracle oracle(*sat, formulas);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (classes.find(i) == classes.find(j)) continue;
      auto ab = oracle.implies(i, j);
      std::optional<bool> ba = ab == false ? std::optional<bool>(false) : oracle.implies(j, i);
      if (!ab || !ba) {
        items[i].flagged = items[j].flagged = true;
        continue;
      }
      if (*ab && *ba) classes.unite(i, j);
    }
  }
  std::map<std::size_t, std::size_t> representative;  // class root -> entry index
  for (std::size_t i = 0; i < n; ++i) {
    auto root = classes.find(i);
    auto [it, fresh] = representative.emplace(root, i);
    if (!fresh && smaller(items[i].formula, items[it->second].formula)) it->second = i;
  }
  std::vector<bool> keep(n, false);
  for (const auto& [root, index] : representative) keep[index] = true;
  BcCorpus out;
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) out.entries.push_back(items[i]);
  return out;
}

BcCorpus dedup(const std::vector<Formula>& raw, DedupMode mode, SatChecker* sat) {
  std::vector<CorpusEntry> entries;
  for (const auto& f : raw) entries.push_back({f, {}, {}, {}, false});
  return dedup(entries, mode, sat);
}

GeneralitySet most_general_set(const BcCorpus& corpus, SatChecker& sat) {
  const auto& items = corpus.entries;
  const auto formulas = formulas_of(items);
  ImplicationOracle oracle(sat, formulas);
  GeneralitySet out;
  auto implies = [&](std::size_t a, std::size_t b) {
    auto r = oracle.implies(a, b);
    if (!r) out.approximate = true;
    return r.value_or(false);
  };

  // Running antichain of class representatives. An entry implying a member is
  // covered by it (or replaces it, when equivalent and smaller); otherwise it
  // joins and evicts the members that imply it.
  std::vector<std::size_t> maximal;
  for (std::size_t x = 0; x < items.size(); ++x) {
    bool covered = false;
    for (auto& m : maximal) {
      if (!implies(x, m)) continue;
      covered = true;
      if (smaller(formulas[x], formulas[m]) && implies(m, x)) m = x;
      break;
    }
    if (covered) continue;
    std::erase_if(maximal, [&](std::size_t m) { return implies(m, x); });
    maximal.push_back(x);
  }
  std::sort(maximal.begin(), maximal.end());
  for (auto i : maximal) out.members.push_back(items[i]);
  return out;
}

SimilarityReport similarity_report(const BcCorpus& corpus) {
  std::vector<Formula> formulas;
  for (const auto& e : corpus.entries) formulas.push_back(e.formula);
  return similarity_report(formulas);
}

SimilarityReport similarity_report(const std::vector<Formula>& formulas) {
  const auto n = formulas.size();
  std::vector<TreeIndex> trees;
  trees.reserve(n);
  for (const auto& f : formulas) trees.emplace_back(f);

  // Per-entry accumulators, filled pair by pair; no distance matrix is kept.
  struct Acc {
    std::size_t within_delta[3] = {};
    std::size_t within_norm[3] = {};
    std::size_t min_delta = SIZE_MAX;
  };
  std::vector<Acc> acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto d = tree_distance(trees[i], trees[j]);
      auto sizes = trees[i].size() + trees[j].size();
      for (auto* a : {&acc[i], &acc[j]}) {
        a->min_delta = std::min(a->min_delta, d);
        for (int t = 0; t < 3; ++t) {
          if (d <= static_cast<std::size_t>(kDeltaThresholds[t])) ++a->within_delta[t];
          if (10 * d <= static_cast<std::size_t>(kNormTenths[t]) * sizes) ++a->within_norm[t];
        }
      }
    }
  }

  SimilarityReport r;
  r.total = n;
  const auto total = static_cast<double>(n);
  for (int t = 0; t < 3; ++t) {
    std::size_t has_delta = 0, sum_delta = 0, has_norm = 0, sum_norm = 0;
    for (const auto& a : acc) {
      has_delta += a.within_delta[t] > 0;
      sum_delta += a.within_delta[t];
      has_norm += a.within_norm[t] > 0;
      sum_norm += a.within_norm[t];
    }
    r.pct_bc_delta[kDeltaThresholds[t]] = n ? 100.0 * static_cast<double>(has_delta) / total : 0.0;
    r.num_sim_delta[kDeltaThresholds[t]] = n ? static_cast<double>(sum_delta) / total : 0.0;
    r.pct_bc_norm[kNormTenths[t]] = n ? 100.0 * static_cast<double>(has_norm) / total : 0.0;
    r.num_sim_norm[kNormTenths[t]] = n ? static_cast<double>(sum_norm) / total : 0.0;
  }
  if (n >= 2) {
    std::size_t sum_min = 0;
    for (const auto& a : acc) sum_min += a.min_delta;
    r.avg_min = static_cast<double>(sum_min) / total;
  }
  return r;
}

std::optional<std::pair<double, double>> consecutive_similarity(const std::vector<Formula>& discoveries) {
  if (discoveries.size() < 2) return std::nullopt;
  double sum_delta = 0;
  double sum_norm = 0;
  for (std::size_t i = 0; i + 1 < discoveries.size(); ++i) {
    auto d = formula_distance(discoveries[i], discoveries[i + 1]);
    sum_delta += static_cast<double>(d);
    sum_norm += normalized_distance(d, discoveries[i].size(), discoveries[i + 1].size()).to_double();
  }
  auto pairs = static_cast<double>(discoveries.size() - 1);
  return std::make_pair(sum_delta / pairs, sum_norm / pairs);
}

std::string to_json(const SimilarityReport& r) {
  nlohmann::ordered_json j;
  auto by_delta = [](const std::map<int, double>& m) {
    nlohmann::ordered_json o;
    for (const auto& [l, v] : m) o[std::to_string(l)] = v;
    return o;
  };
  auto by_norm = [](const std::map<int, double>& m) {
    nlohmann::ordered_json o;
    for (const auto& [k, v] : m) o["0." + std::to_string(k)] = v;
    return o;
  };
  j["total"] = r.total;
  j["pct_bc_delta"] = by_delta(r.pct_bc_delta);
  j["num_sim_delta"] = by_delta(r.num_sim_delta);
  j["pct_bc_norm"] = by_norm(r.pct_bc_norm);
  j["num_sim_norm"] = by_norm(r.num_sim_norm);
  j["avg_min"] = r.avg_min ? nlohmann::ordered_json(*r.avg_min) : nlohmann::ordered_json(nullptr);
  return j.dump(2);
}

std::string to_csv(const SimilarityReport& r, const std::string& label) {
  std::ostringstream out;
  out << "case";
  for (int l : kDeltaThresholds) out << ",%BC(d<=" << l << ")";
  for (int l : kDeltaThresholds) out << ",#sim(d<=" << l << ")";
  for (int k : kNormTenths) out << ",%BC(D<=0." << k << ")";
  for (int k : kNormTenths) out << ",#sim(D<=0." << k << ")";
  out << ",avg min,#total\n" << label;
  for (int l : kDeltaThresholds) out << ',' << fixed3(r.pct_bc_delta.at(l));
  for (int l : kDeltaThresholds) out << ',' << fixed3(r.num_sim_delta.at(l));
  for (int k : kNormTenths) out << ',' << fixed3(r.pct_bc_norm.at(k));
  for (int k : kNormTenths) out << ',' << fixed3(r.num_sim_norm.at(k));
  out << ',' << (r.avg_min ? fixed3(*r.avg_min) : std::string()) << ',' << r.total << '\n';
  return out.str();
}

}  // namespace logion
