#pragma once

#include "logion/rational.hpp"
#include "logion/sat.hpp"
#include "logion/specification.hpp"

#include <vector>

namespace logion {

/// A candidate with every term of the fitness function.
struct ScoredCandidate {
  Formula formula;
  int li = 0;                       // 1 iff Dom & G & phi is UNSAT
  std::vector<Rational> min_vector; // 1/|G| per goal whose removal restores consistency
  Rational nt;                      // 1/2 iff phi is not equivalent to !G
  Rational size_term;               // 1/|phi|
  Rational score;
  bool is_bc = false;
  std::size_t sat_calls = 0;
  bool budget_exhausted = false;
};

/// !(G1 & (G2 & ... & Gn)).
Formula trivial_condition(const Specification& spec);

/// Scores phi. Always issues 1 + |G| + 2 satisfiability queries; a query that
/// runs out of budget contributes 0 and disqualifies the candidate.
ScoredCandidate evaluate(const Formula& phi, const Specification& spec, SatChecker& sat);

/// Per-property outcome of a from-scratch boundary-condition check.
struct BcVerdict {
  bool inconsistency = false;
  std::vector<bool> minimality;  // per goal
  bool non_triviality = false;
  bool budget_exhausted = false;

  bool is_bc() const;
};

/// Re-checks the three defining properties without consulting any cache.
BcVerdict verify_bc(const Formula& phi, const Specification& spec, const SatConfig& config = sat_config_from_env());

}  // namespace logion
