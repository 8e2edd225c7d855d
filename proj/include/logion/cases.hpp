#pragma once

#include "logion/specification.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logion {

/// Reference figures for one case as published, kept next to our encoding.
struct CaseManifest {
  std::size_t domains = 0;
  std::size_t goals = 0;
  std::size_t variables = 0;
  std::size_t published_size = 0;  // informational; conventions differ
};

struct BundledCase {
  std::string id;
  Specification spec;
  CaseManifest manifest;
  std::string provenance;
  /// A boundary condition verified for this encoding, if one is recorded.
  std::optional<std::string> known_bc;

  /// Sum of the sizes of all domain and goal formulae.
  std::size_t computed_size() const;
};

struct MissingCase {
  std::string id;
  CaseManifest manifest;
  std::string reason;
};

const std::vector<BundledCase>& bundled_cases();
const std::vector<MissingCase>& missing_cases();
/// Case-insensitive lookup by id ("minepump", "MP", ...). Nullptr if absent.
const BundledCase* find_case(const std::string& id);

}  // namespace logion
