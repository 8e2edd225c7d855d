#include "logion/objective.hpp"

#include <algorithm>

namespace logion {

Formula trivial_condition(const Specification& spec) { return make_not(spec.goal_conjunction()); }

namespace {

// Query outcomes in a fixed order: li, then one per goal, then the two
// non-triviality queries.
struct Queries {
  std::optional<bool> inconsistent;
  std::vector<std::optional<bool>> minimal;
  std::optional<bool> non_trivial;
  std::size_t calls = 0;
};

template <typename Sat>
Queries run_queries(const Formula& phi, const Specification& spec, Sat&& satisfiable) {
  Queries q;
  auto ask = [&](const Formula& f) -> std::optional<bool> {
    ++q.calls;
    try {
      return satisfiable(f);
    } catch (const ResourceLimit&) {
      return std::nullopt;
    }
  };
  const auto dom = spec.domain();
  const auto goals = spec.goal_conjunction();

  if (auto s = ask(make_and(dom, make_and(goals, phi)))) q.inconsistent = !*s;
  for (std::size_t i = 0; i < spec.goals.size(); ++i)
    q.minimal.push_back(ask(make_and(dom, make_and(spec.goals_without(i), phi))));
  auto together = ask(make_and(goals, phi));
  auto neither = ask(make_and(make_not(goals), make_not(phi)));
  if ((together && *together) || (neither && *neither)) q.non_trivial = true;
  else if (together && neither) q.non_trivial = false;
  return q;
}

}  // namespace

ScoredCandidate evaluate(const Formula& phi, const Specification& spec, SatChecker& sat) {
  auto q = run_queries(phi, spec, [&](const Formula& f) { return sat.satisfiable(f); });
  ScoredCandidate c;
  c.formula = phi;
  c.sat_calls = q.calls;
  const Rational share(1, static_cast<std::int64_t>(spec.goals.size()));

  c.budget_exhausted = !q.inconsistent || !q.non_trivial;
  c.li = q.inconsistent.value_or(false) ? 1 : 0;
  bool all_minimal = true;
  for (const auto& m : q.minimal) {
    c.budget_exhausted |= !m;
    bool ok = m.value_or(false);
    all_minimal &= ok;
    c.min_vector.push_back(ok ? share : Rational(0));
  }
  c.nt = q.non_trivial.value_or(false) ? Rational(1, 2) : Rational(0);
  c.size_term = Rational(1, static_cast<std::int64_t>(phi.size()));
  c.score = Rational(c.li) + c.nt + c.size_term;
  for (const auto& m : c.min_vector) c.score += m;
  c.is_bc = !c.budget_exhausted && c.li == 1 && all_minimal && c.nt == Rational(1, 2);
  return c;
}

bool BcVerdict::is_bc() const {
  return !budget_exhausted && inconsistency && non_triviality &&
         std::all_of(minimality.begin(), minimality.end(), [](bool b) { return b; });
}

BcVerdict verify_bc(const Formula& phi, const Specification& spec, const SatConfig& config) {
  auto q = run_queries(phi, spec, [&](const Formula& f) { return check_sat(f, {}, config).sat(); });
  BcVerdict v;
  v.budget_exhausted = !q.inconsistent || !q.non_trivial;
  v.inconsistency = q.inconsistent.value_or(false);
  for (const auto& m : q.minimal) {
    v.budget_exhausted |= !m;
    v.minimality.push_back(m.value_or(false));
  }
  v.non_triviality = q.non_trivial.value_or(false);
  return v;
}

}  // namespace logion
