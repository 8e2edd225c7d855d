#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logion {

/// Node kinds of the LTL abstract syntax.
enum class Op : std::uint8_t {
  True,
  False,
  Var,
  Not,
  Next,
  Always,
  Eventually,
  And,
  Or,
  Implies,
  Until,
  Release,
  WeakUntil,
};

constexpr int arity(Op op) noexcept {
  switch (op) {
  case Op::True:
  case Op::False:
  case Op::Var:
    return 0;
  case Op::Not:
  case Op::Next:
  case Op::Always:
  case Op::Eventually:
    return 1;
  default:
    return 2;
  }
}

constexpr bool is_leaf(Op op) noexcept { return arity(op) == 0; }
constexpr bool is_unary(Op op) noexcept { return arity(op) == 1; }
constexpr bool is_binary(Op op) noexcept { return arity(op) == 2; }

/// Canonical ASCII rendering of an operator ("G", "->", "true", ...).
/// Not meaningful for Op::Var.
std::string_view symbol(Op op) noexcept;

using Vocabulary = std::set<std::string>;

/// Root-to-node path: child indices (0 or 1) from the root.
using Path = std::vector<std::uint8_t>;

/// Immutable LTL formula with value semantics. Subtrees are shared, so copies
/// are cheap; equality is structural.
class Formula {
public:
  Formula();  // the constant true

  static Formula constant(bool value);
  static Formula var(std::string name);
  static Formula unary(Op op, Formula child);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept;
  /// Variable name; empty for every other kind.
  const std::string& name() const noexcept;
  int arity() const noexcept { return logion::arity(op()); }
  const Formula& child(std::size_t index) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  /// Number of nodes (variables, constants and operators).
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  bool is_constant(bool value) const noexcept {
    return op() == (value ? Op::True : Op::False);
  }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;

  /// Identity of the shared node; only useful as a memoization key.
  const void* identity() const noexcept { return node_.get(); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// Builders.
Formula make_not(Formula f);
Formula make_and(Formula a, Formula b);
Formula make_or(Formula a, Formula b);

/// Right-nested conjunction a1 & (a2 & (... & an)); true when empty.
Formula conjunction(std::span<const Formula> parts);

/// Fully parenthesized canonical text; parse(print(f)) == f.
std::string print(const Formula& f);

/// Structural identity key (two formulae share a key iff they are equal).
inline std::string canonical_key(const Formula& f) { return print(f); }

struct Subformula {
  Formula formula;
  Path path;
};

/// Every node in preorder, paired with its path. The first entry is f itself.
std::vector<Subformula> subformulae(const Formula& f);

/// Node at path; throws std::out_of_range if the path does not exist.
const Formula& at(const Formula& f, std::span<const std::uint8_t> path);

/// Copy of f with the node at path replaced by replacement.
Formula replace_at(const Formula& f, std::span<const std::uint8_t> path, const Formula& replacement);

Vocabulary variables(const Formula& f);

/// True for `[A-Za-z_][A-Za-z0-9_]*` that is not a reserved word.
bool is_identifier(std::string_view text) noexcept;

}  // namespace logion
