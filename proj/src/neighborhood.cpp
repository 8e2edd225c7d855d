#include "logion/neighborhood.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>

namespace logion {

namespace {

constexpr Op kUnaryOps[] = {Op::Not, Op::Always, Op::Eventually, Op::Next};
constexpr Op kBinaryOps[] = {Op::And, Op::Or, Op::Until, Op::Release, Op::WeakUntil};

bool editable_unary(Op op) { return std::find(std::begin(kUnaryOps), std::end(kUnaryOps), op) != std::end(kUnaryOps); }
bool editable_binary(Op op) {
  return std::find(std::begin(kBinaryOps), std::end(kBinaryOps), op) != std::end(kBinaryOps);
}

std::string path_text(const Path& path) {
  std::string s = "/";
  for (auto i : path) s += std::to_string(i);
  return s;
}

}  // namespace

std::string describe(const EditOp& e) {
  auto where = " at " + path_text(e.path);
  switch (e.kind) {
  case EditKind::Rename:
    return "rename to " + (is_leaf(e.op) ? print(e.leaf) : std::string(symbol(e.op))) + where;
  case EditKind::Insert:
    if (is_unary(e.op)) return "insert " + std::string(symbol(e.op)) + where;
    return "insert " + std::string(symbol(e.op)) + " with " + print(e.leaf) +
           (e.side == Side::Left ? " on the left" : " on the right") + where;
  case EditKind::Delete:
    return "delete" + where + (is_binary(e.op) ? " keeping child " + std::to_string(e.keep) : "");
  }
  return {};
}

std::vector<Formula> leaf_alphabet(const Formula& f, const Vocabulary& vocabulary, const NeighborhoodOptions& options) {
  std::vector<Formula> out;
  if (options.include_constants) {
    out.push_back(Formula::constant(true));
    out.push_back(Formula::constant(false));
  }
  auto vars = vocabulary;
  vars.merge(variables(f));
  for (const auto& v : vars) out.push_back(Formula::var(v));
  return out;
}

std::vector<EditOp> applicable_edits_at(const Formula& f, const Path& path, const std::vector<Formula>& alphabet,
                                        const NeighborhoodOptions& options) {
  const auto& node = at(f, path);
  std::vector<EditOp> out;
  auto edit = [&](EditKind kind, Op op) {
    EditOp e;
    e.kind = kind;
    e.path = path;
    e.op = op;
    return e;
  };

  // Rename
  if (node.arity() == 0) {
    for (const auto& leaf : alphabet) {
      if (leaf == node) continue;
      auto e = edit(EditKind::Rename, leaf.op());
      e.leaf = leaf;
      out.push_back(std::move(e));
    }
  } else if (node.arity() == 1) {
    for (auto op : kUnaryOps)
      if (op != node.op()) out.push_back(edit(EditKind::Rename, op));
  } else if (editable_binary(node.op())) {
    for (auto op : kBinaryOps)
      if (op != node.op()) out.push_back(edit(EditKind::Rename, op));
  }

  // Insert
  for (auto op : kUnaryOps) out.push_back(edit(EditKind::Insert, op));
  for (auto op : kBinaryOps) {
    for (auto side : {Side::Right, Side::Left}) {
      if (side == Side::Left && !options.insert_both_sides) continue;
      for (const auto& leaf : alphabet) {
        auto e = edit(EditKind::Insert, op);
        e.leaf = leaf;
        e.side = side;
        out.push_back(std::move(e));
      }
    }
  }

  // Delete
  if (node.arity() == 1) {
    out.push_back(edit(EditKind::Delete, node.op()));
  } else if (node.arity() == 2) {
    for (std::uint8_t keep = 0; keep < 2; ++keep) {
      if (node.child(1 - keep).arity() != 0) continue;
      auto e = edit(EditKind::Delete, node.op());
      e.keep = keep;
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<EditOp> applicable_edits(const Formula& f, const Vocabulary& vocabulary, const NeighborhoodOptions& options) {
  auto alphabet = leaf_alphabet(f, vocabulary, options);
  std::vector<EditOp> out;
  for (const auto& sub : subformulae(f)) {
    auto edits = applicable_edits_at(f, sub.path, alphabet, options);
    out.insert(out.end(), std::make_move_iterator(edits.begin()), std::make_move_iterator(edits.end()));
  }
  return out;
}

Formula apply_edit(const Formula& f, const EditOp& e) {
  const Formula* target = nullptr;
  try {
    target = &at(f, e.path);
  } catch (const std::out_of_range&) {
    throw InapplicableEdit("no subformula at " + path_text(e.path));
  }
  const auto& node = *target;
  Formula replacement;
  switch (e.kind) {
  case EditKind::Rename:
    if (node.arity() == 0) {
      if (e.leaf.arity() != 0 || e.leaf == node) throw InapplicableEdit("leaf rename needs a different leaf symbol");
      replacement = e.leaf;
    } else if (node.arity() == 1) {
      if (!editable_unary(e.op) || e.op == node.op()) throw InapplicableEdit("unary rename needs a different unary operator");
      replacement = Formula::unary(e.op, node.lhs());
    } else {
      if (!editable_binary(node.op())) throw InapplicableEdit("cannot rename " + std::string(symbol(node.op())));
      if (!editable_binary(e.op) || e.op == node.op())
        throw InapplicableEdit("binary rename needs a different binary operator");
      replacement = Formula::binary(e.op, node.lhs(), node.rhs());
    }
    break;
  case EditKind::Insert:
    if (editable_unary(e.op)) {
      replacement = Formula::unary(e.op, node);
    } else if (editable_binary(e.op)) {
      if (e.leaf.arity() != 0) throw InapplicableEdit("binary insert needs a leaf operand");
      replacement = e.side == Side::Right ? Formula::binary(e.op, node, e.leaf) : Formula::binary(e.op, e.leaf, node);
    } else {
      throw InapplicableEdit("cannot insert " + std::string(symbol(e.op)));
    }
    break;
  case EditKind::Delete:
    if (node.arity() == 0) throw InapplicableEdit("cannot delete a leaf");
    if (node.arity() == 1) {
      replacement = node.lhs();
    } else {
      if (e.keep > 1) throw InapplicableEdit("binary delete keeps child 0 or 1");
      if (node.child(1 - e.keep).arity() != 0) throw InapplicableEdit("binary delete may only drop a leaf operand");
      replacement = node.child(e.keep);
    }
    break;
  }
  return replace_at(f, e.path, replacement);
}

std::vector<Formula> neighbors(const Formula& f, const Vocabulary& vocabulary, const NeighborhoodOptions& options) {
  std::vector<Formula> out;
  std::unordered_set<std::string> seen;
  for (const auto& e : applicable_edits(f, vocabulary, options)) {
    auto g = apply_edit(f, e);
    if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Formula> sample_neighbors(const Formula& f, std::size_t k, const Vocabulary& vocabulary, std::mt19937_64& rng,
                                      const NeighborhoodOptions& options) {
  auto alphabet = leaf_alphabet(f, vocabulary, options);
  auto subs = subformulae(f);
  std::vector<std::vector<EditOp>> per_position(subs.size());
  std::vector<Formula> out;
  out.reserve(k);
  std::uniform_int_distribution<std::size_t> pick_position(0, subs.size() - 1);
  for (std::size_t draw = 0; draw < k; ++draw) {
    auto pos = pick_position(rng);
    auto& edits = per_position[pos];
    if (edits.empty()) edits = applicable_edits_at(f, subs[pos].path, alphabet, options);
    std::uniform_int_distribution<std::size_t> pick_edit(0, edits.size() - 1);
    out.push_back(apply_edit(f, edits[pick_edit(rng)]));
  }
  return out;
}

bool TabuMemory::contains(const std::string& key) const {
  return std::find(entries_.begin(), entries_.end(), key) != entries_.end();
}

void TabuMemory::visit(const Formula& f) {
  if (tenure_ == 0) return;
  auto key = canonical_key(f);
  if (auto it = std::find(entries_.begin(), entries_.end(), key); it != entries_.end()) entries_.erase(it);
  entries_.push_back(std::move(key));
  while (entries_.size() > tenure_) entries_.pop_front();
}

std::vector<Formula> filter_tabu(const std::vector<Formula>& candidates, const TabuMemory& memory) {
  std::vector<Formula> out;
  for (const auto& c : candidates)
    if (!memory.contains(c)) out.push_back(c);
  return out;
}

void record_visit(TabuMemory& memory, const Formula& f) { memory.visit(f); }

namespace {

bool contains_implication(const Formula& f) {
  if (f.op() == Op::Implies) return true;
  for (int i = 0; i < f.arity(); ++i)
    if (contains_implication(f.child(i))) return true;
  return false;
}

// First node in preorder that can be deleted under the leaf-operand rule.
std::optional<EditOp> shrinking_delete(const Formula& f) {
  for (const auto& sub : subformulae(f)) {
    const auto& n = sub.formula;
    EditOp e;
    e.kind = EditKind::Delete;
    e.path = sub.path;
    e.op = n.op();
    if (n.arity() == 1) return e;
    if (n.arity() == 2) {
      if (n.rhs().arity() == 0) return e;
      if (n.lhs().arity() == 0) {
        e.keep = 1;
        return e;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<EditOp> reachability_script(const Formula& from, const Formula& to, const Vocabulary& vocabulary,
                                        const NeighborhoodOptions& options) {
  if (contains_implication(to)) throw std::invalid_argument("target contains '->', which no edit creates");
  auto vocab = vocabulary;
  vocab.merge(variables(from));
  if (!options.include_constants) {
    std::function<bool(const Formula&)> has_constant = [&](const Formula& g) {
      if (g.op() == Op::True || g.op() == Op::False) return true;
      for (int i = 0; i < g.arity(); ++i)
        if (has_constant(g.child(i))) return true;
      return false;
    };
    if (has_constant(to)) throw std::invalid_argument("target uses constants, which are disabled");
  }
  for (const auto& v : variables(to))
    if (!vocab.contains(v)) throw std::invalid_argument("target variable '" + v + "' is outside the vocabulary");

  std::vector<EditOp> script;
  auto current = from;
  while (auto e = shrinking_delete(current)) {
    current = apply_edit(current, *e);
    script.push_back(*e);
  }
  auto filler = leaf_alphabet(current, vocab, options).front();

  std::function<void(const Path&, const Formula&)> build = [&](const Path& path, const Formula& target) {
    EditOp e;
    e.path = path;
    switch (target.arity()) {
    case 0:
      if (at(current, path) == target) return;
      e.kind = EditKind::Rename;
      e.op = target.op();
      e.leaf = target;
      break;
    case 1:
      build(path, target.lhs());
      e.kind = EditKind::Insert;
      e.op = target.op();
      break;
    default: {
      build(path, target.lhs());
      e.kind = EditKind::Insert;
      e.op = target.op();
      e.leaf = filler;
      e.side = Side::Right;
      current = apply_edit(current, e);
      script.push_back(e);
      auto right = path;
      right.push_back(1);
      build(right, target.rhs());
      return;
    }
    }
    current = apply_edit(current, e);
    script.push_back(e);
  };
  build({}, to);
  return script;
}

}  // namespace logion
