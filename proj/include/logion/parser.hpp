#pragma once

#include "logion/formula.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logion {

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, UnknownOperator, UndeclaredVariable };

  ParseError(Kind kind, std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& message);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

struct ParseOptions {
  /// When set, identifiers outside this set are rejected.
  std::optional<Vocabulary> vocabulary;
  /// Rewrite `a -> b` to `!a | b` while parsing.
  bool desugar_implication = false;
};

/// Precedence, tightest first: `! X F G`, then `U R W` (right-assoc), `&`, `|`,
/// and `->` (right-assoc). Aliases: `[]` = G, `<>` = F, `&&` = &, `||` = |.
Formula parse(std::string_view text, const ParseOptions& options = {});

}  // namespace logion
