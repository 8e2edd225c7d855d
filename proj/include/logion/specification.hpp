#pragma once

#include "logion/formula.hpp"

#include <string>
#include <vector>

namespace logion {

struct NamedFormula {
  std::string name;
  Formula formula;
};

/// Domain properties and goals of one requirements specification. Goal order
/// is significant: per-goal minimality results are reported by index.
struct Specification {
  std::string name;
  std::vector<NamedFormula> domains;
  std::vector<NamedFormula> goals;
  /// Explicitly declared variables; the effective vocabulary also contains
  /// every variable used by a formula.
  Vocabulary declared;

  Vocabulary vocabulary() const;
  /// Throws std::invalid_argument when there are no goals.
  void validate() const;

  /// Dom as a right-nested conjunction; true when there are none.
  Formula domain() const;
  /// G = G1 & (G2 & ... & Gn).
  Formula goal_conjunction() const;
  /// Conjunction of all goals except index i; true for a single goal.
  Formula goals_without(std::size_t i) const;
};

}  // namespace logion
