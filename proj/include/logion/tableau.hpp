#pragma once

#include "logion/formula.hpp"
#include "logion/lasso.hpp"
#include "logion/sat.hpp"

#include <cstddef>
#include <vector>

namespace logion::tableau {

/// One expansion step out of a tableau node: the letter it reads, and the
/// eventualities (indices into TableauGraph::eventualities) it postpones.
struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  State positive;
  Vocabulary negative;
  std::vector<std::size_t> postponed;
};

/// Fully explored obligation graph of a formula in negation normal form.
/// Nodes are the obligation sets reachable from the initial node (index 0);
/// an edge's target is the set of obligations its expansion deferred to the
/// next position.
struct TableauGraph {
  std::vector<std::vector<Formula>> nodes;
  std::vector<Edge> edges;
  /// Until-type obligations (`a U b`) of the normalized query.
  std::vector<Formula> eventualities;
  /// For each eventuality, the nodes with an outgoing edge that does not
  /// postpone it.
  std::vector<std::vector<std::size_t>> fulfilling;
};

/// Negation normal form over {true, false, literals, &, |, X, U, R} with
/// constants folded. G, F, W and -> are rewritten by their defining identities.
Formula negation_normal_form(const Formula& f);

/// Explores the whole reachable graph (no early exit). Intended for
/// inspection and tests; check_sat uses the same expansion on the fly.
TableauGraph build_tableau(const Formula& f, const SatConfig& config = {});

}  // namespace logion::tableau
