#pragma once

#include "logion/formula.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace logion {

/// Variables that hold in one state.
using State = std::set<std::string>;

/// Ultimately periodic trace: prefix followed by loop repeated forever.
struct LassoTrace {
  std::vector<State> prefix;
  std::vector<State> loop;  // never empty

  std::size_t period_start() const noexcept { return prefix.size(); }
  /// Distinct positions: |prefix| + |loop|.
  std::size_t length() const noexcept { return prefix.size() + loop.size(); }
  /// Maps any position onto an equivalent one in [0, length()).
  std::size_t fold(std::size_t position) const noexcept;
  const State& state(std::size_t position) const;

  friend bool operator==(const LassoTrace&, const LassoTrace&) = default;
};

/// Truth of `M, position |= f` on the infinite word denoted by the lasso.
/// Variables absent from a state are false. Throws std::invalid_argument on an
/// empty loop.
bool eval_on_lasso(const Formula& f, const LassoTrace& trace, std::size_t position = 0);

}  // namespace logion
