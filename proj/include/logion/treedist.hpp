#pragma once

#include "logion/formula.hpp"
#include "logion/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace logion {

/// Ordered labeled tree.
struct LabeledTree {
  std::string label;
  std::vector<LabeledTree> children;

  std::size_t size() const noexcept;
  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

/// Parse tree of f: operators labeled by their canonical symbol, variables by
/// name, constants by "true"/"false".
LabeledTree to_parse_tree(const Formula& f);

/// Postorder numbering with leftmost-leaf indices and keyroots, computed once
/// so repeated distance queries against the same tree skip the setup.
class TreeIndex {
public:
  explicit TreeIndex(const LabeledTree& tree);
  explicit TreeIndex(const Formula& f) : TreeIndex(to_parse_tree(f)) {}

  std::size_t size() const noexcept { return labels_.size(); }

private:
  friend std::size_t tree_distance(const TreeIndex&, const TreeIndex&);
  std::vector<std::string> labels_;   // postorder, 0-based
  std::vector<std::size_t> leftmost_; // leftmost leaf of each node
  std::vector<std::size_t> keyroots_; // ascending
};

/// Unit-cost ordered tree edit distance (Zhang-Shasha).
std::size_t tree_distance(const TreeIndex& a, const TreeIndex& b);
std::size_t tree_distance(const LabeledTree& a, const LabeledTree& b);

std::size_t formula_distance(const Formula& a, const Formula& b);

/// delta(a, b) / (|a| + |b|).
Rational normalized_distance(const Formula& a, const Formula& b);
Rational normalized_distance(std::size_t distance, std::size_t size_a, std::size_t size_b);

}  // namespace logion
