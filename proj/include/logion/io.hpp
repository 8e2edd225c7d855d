#pragma once

#include "logion/search.hpp"
#include "logion/specification.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logion {

/// Malformed specification or result document. `what()` names the offending
/// field, and for formula errors includes the line:column of the parse error.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Specification spec_from_json(const std::string& text);
std::string spec_to_json(const Specification& spec);
Specification load_spec(const std::filesystem::path& path);

struct ResultBc {
  std::string formula;
  int li = 0;
  std::vector<std::string> min_vector;  // rationals as "a/b"
  std::string nt;
  std::string size_term;
  std::string score;
  std::size_t size = 0;
  std::int64_t discovery_ms = 0;  // timing; outside the determinism contract
  std::size_t iteration = 0;
  std::size_t run = 0;
};

struct ResultSummary {
  std::size_t bc_count = 0;
  std::optional<double> t_fbc_ms;
  std::optional<std::size_t> s_bbc;
  bool success = false;
  std::size_t runs = 1;
  std::size_t successful_runs = 0;
  double mean_bc = 0;
};

struct ResultFile {
  Specification spec;  // embedded so results can be re-verified standalone
  std::size_t k = 50;
  std::size_t tabu = 4;
  std::uint64_t seed = 0;
  std::int64_t cutoff_ms = 0;
  std::vector<ResultBc> bcs;
  ResultSummary summary;
};

ResultFile make_result_file(const Specification& spec, const SearchConfig& config, const PortfolioResult& result);
std::string result_to_json(const ResultFile& result);
ResultFile result_from_json(const std::string& text);
ResultFile load_result(const std::filesystem::path& path);

/// Writes through a temporary sibling file and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace logion
