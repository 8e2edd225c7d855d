#pragma once

#include "logion/formula.hpp"
#include "logion/lasso.hpp"
#include "logion/parser.hpp"
#include "logion/specification.hpp"

#include <random>
#include <string>
#include <vector>

namespace logion::testing {

struct GenOptions {
  std::vector<std::string> vars{"p", "q"};
  bool constants = true;
  bool implication = true;
};

inline Formula random_leaf(std::mt19937_64& rng, const GenOptions& o) {
  std::size_t n = o.vars.size() + (o.constants ? 2 : 0);
  auto i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  if (i < o.vars.size()) return Formula::var(o.vars[i]);
  return Formula::constant(i == o.vars.size());
}

/// Uniform-ish random AST with exactly `size` nodes.
inline Formula random_formula_of_size(std::mt19937_64& rng, std::size_t size, const GenOptions& o = {}) {
  static constexpr Op unary[] = {Op::Not, Op::Next, Op::Always, Op::Eventually};
  static constexpr Op binary[] = {Op::And, Op::Or, Op::Until, Op::Release, Op::WeakUntil, Op::Implies};
  if (size <= 1) return random_leaf(rng, o);
  bool use_unary = size == 2 || std::bernoulli_distribution(0.4)(rng);
  if (use_unary) {
    auto op = unary[std::uniform_int_distribution<int>(0, 3)(rng)];
    return Formula::unary(op, random_formula_of_size(rng, size - 1, o));
  }
  auto op = binary[std::uniform_int_distribution<int>(0, o.implication ? 5 : 4)(rng)];
  auto left = std::uniform_int_distribution<std::size_t>(1, size - 2)(rng);
  auto l = random_formula_of_size(rng, left, o);
  auto r = random_formula_of_size(rng, size - 1 - left, o);
  return Formula::binary(op, std::move(l), std::move(r));
}

inline Formula random_formula(std::mt19937_64& rng, std::size_t max_size, const GenOptions& o = {}) {
  auto size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
  return random_formula_of_size(rng, size, o);
}

inline LassoTrace random_lasso(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t max_prefix,
                               std::size_t max_loop) {
  LassoTrace t;
  auto state = [&] {
    State s;
    for (const auto& v : vars)
      if (std::bernoulli_distribution(0.5)(rng)) s.insert(v);
    return s;
  };
  auto p = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
  auto l = std::uniform_int_distribution<std::size_t>(1, max_loop)(rng);
  for (std::size_t i = 0; i < p; ++i) t.prefix.push_back(state());
  for (std::size_t i = 0; i < l; ++i) t.loop.push_back(state());
  return t;
}

inline Specification minepump() {
  Specification s;
  s.name = "minepump";
  s.domains = {{"Dom", parse("G((p & X p) -> X X !h)")}};
  s.goals = {{"G1", parse("G(h -> X p)")}, {"G2", parse("G(m -> X !p)")}};
  return s;
}

}  // namespace logion::testing
