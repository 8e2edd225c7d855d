#include "logion/specification.hpp"

#include <stdexcept>

namespace logion {

namespace {

Formula conjoin(const std::vector<NamedFormula>& items, std::size_t skip) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (i != skip) parts.push_back(items[i].formula);
  return conjunction(parts);
}

}  // namespace

Vocabulary Specification::vocabulary() const {
  auto out = declared;
  for (const auto& d : domains) out.merge(variables(d.formula));
  for (const auto& g : goals) out.merge(variables(g.formula));
  return out;
}

void Specification::validate() const {
  if (goals.empty()) throw std::invalid_argument("specification '" + name + "' has no goals");
}

Formula Specification::domain() const { return conjoin(domains, domains.size()); }
Formula Specification::goal_conjunction() const { return conjoin(goals, goals.size()); }
Formula Specification::goals_without(std::size_t i) const { return conjoin(goals, i); }

}  // namespace logion
