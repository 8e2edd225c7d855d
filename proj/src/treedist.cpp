#include "logion/treedist.hpp"

#include <algorithm>
#include <functional>

namespace logion {

std::size_t LabeledTree::size() const noexcept {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

LabeledTree to_parse_tree(const Formula& f) {
  LabeledTree t{f.op() == Op::Var ? f.name() : std::string(symbol(f.op())), {}};
  for (int i = 0; i < f.arity(); ++i) t.children.push_back(to_parse_tree(f.child(i)));
  return t;
}

TreeIndex::TreeIndex(const LabeledTree& tree) {
  std::function<std::size_t(const LabeledTree&)> visit = [&](const LabeledTree& t) {
    std::size_t first = labels_.size();
    bool have_first = false;
    for (const auto& c : t.children) {
      auto lm = visit(c);
      if (!have_first) {
        first = lm;
        have_first = true;
      }
    }
    labels_.push_back(t.label);
    leftmost_.push_back(have_first ? first : labels_.size() - 1);
    return leftmost_.back();
  };
  visit(tree);
  // A keyroot is the highest node having a given leftmost leaf.
  std::vector<bool> seen(labels_.size(), false);
  for (std::size_t i = labels_.size(); i-- > 0;) {
    if (!seen[leftmost_[i]]) {
      seen[leftmost_[i]] = true;
      keyroots_.push_back(i);
    }
  }
  std::sort(keyroots_.begin(), keyroots_.end());
}

std::size_t tree_distance(const TreeIndex& a, const TreeIndex& b) {
  const auto n = a.size();
  const auto m = b.size();
  std::vector<std::size_t> td(n * m, 0);
  std::vector<std::size_t> fd((n + 1) * (m + 1), 0);
  auto TD = [&](std::size_t i, std::size_t j) -> std::size_t& { return td[i * m + j]; };

  for (auto i : a.keyroots_) {
    for (auto j : b.keyroots_) {
      const auto li = a.leftmost_[i];
      const auto lj = b.leftmost_[j];
      const auto rows = i - li + 2;
      const auto cols = j - lj + 2;
      auto FD = [&](std::size_t x, std::size_t y) -> std::size_t& { return fd[x * cols + y]; };
      FD(0, 0) = 0;
      for (std::size_t x = 1; x < rows; ++x) FD(x, 0) = FD(x - 1, 0) + 1;
      for (std::size_t y = 1; y < cols; ++y) FD(0, y) = FD(0, y - 1) + 1;
      for (std::size_t x = 1; x < rows; ++x) {
        const auto ni = li + x - 1;
        for (std::size_t y = 1; y < cols; ++y) {
          const auto nj = lj + y - 1;
          auto best = std::min(FD(x - 1, y), FD(x, y - 1)) + 1;
          if (a.leftmost_[ni] == li && b.leftmost_[nj] == lj) {
            best = std::min(best, FD(x - 1, y - 1) + (a.labels_[ni] == b.labels_[nj] ? 0 : 1));
            FD(x, y) = best;
            TD(ni, nj) = best;
          } else {
            const auto px = a.leftmost_[ni] - li;
            const auto py = b.leftmost_[nj] - lj;
            FD(x, y) = std::min(best, FD(px, py) + TD(ni, nj));
          }
        }
      }
    }
  }
  return TD(n - 1, m - 1);
}

std::size_t tree_distance(const LabeledTree& a, const LabeledTree& b) {
  return tree_distance(TreeIndex(a), TreeIndex(b));
}

std::size_t formula_distance(const Formula& a, const Formula& b) { return tree_distance(TreeIndex(a), TreeIndex(b)); }

Rational normalized_distance(std::size_t distance, std::size_t size_a, std::size_t size_b) {
  return {static_cast<std::int64_t>(distance), static_cast<std::int64_t>(size_a + size_b)};
}

Rational normalized_distance(const Formula& a, const Formula& b) {
  return normalized_distance(formula_distance(a, b), a.size(), b.size());
}

}  // namespace logion
