#include "logion/formula.hpp"

#include <array>
#include <utility>
#include <functional>
#include <stdexcept>

namespace logion {

struct Formula::Node {
  Op op;
  std::uint32_t size;
  std::size_t hash;
  std::string name;
  std::vector<Formula> kids;  // empty for leaves
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view symbol(Op op) noexcept {
  switch (op) {
  case Op::True: return "true";
  case Op::False: return "false";
  case Op::Var: return "";
  case Op::Not: return "!";
  case Op::Next: return "X";
  case Op::Always: return "G";
  case Op::Eventually: return "F";
  case Op::And: return "&";
  case Op::Or: return "|";
  case Op::Implies: return "->";
  case Op::Until: return "U";
  case Op::Release: return "R";
  case Op::WeakUntil: return "W";
  }
  return "?";
}

Formula::Formula() : Formula(constant(true)) {}

Formula Formula::constant(bool value) {
  static const auto t = std::make_shared<const Node>(Node{Op::True, 1, mix(1, 0), {}, {}});
  static const auto f = std::make_shared<const Node>(Node{Op::False, 1, mix(2, 0), {}, {}});
  return Formula(value ? t : f);
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name))
    throw std::invalid_argument("invalid variable name '" + name + "'");
  auto h = mix(3, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Op::Var, 1, h, std::move(name), {}}));
}

Formula Formula::unary(Op op, Formula child) {
  if (!is_unary(op)) throw std::invalid_argument("operator is not unary");
  auto h = mix(mix(static_cast<std::size_t>(op) + 16, 0), child.hash());
  auto size = static_cast<std::uint32_t>(child.size() + 1);
  Node node{op, size, h, {}, {}};
  node.kids.push_back(std::move(child));
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (!is_binary(op)) throw std::invalid_argument("operator is not binary");
  auto h = mix(mix(mix(static_cast<std::size_t>(op) + 16, 0), lhs.hash()), rhs.hash());
  auto size = static_cast<std::uint32_t>(lhs.size() + rhs.size() + 1);
  Node node{op, size, h, {}, {}};
  node.kids.reserve(2);
  node.kids.push_back(std::move(lhs));
  node.kids.push_back(std::move(rhs));
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

const Formula& Formula::child(std::size_t index) const {
  if (index >= static_cast<std::size_t>(arity()))
    throw std::out_of_range("formula has no child " + std::to_string(index));
  return node_->kids[index];
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.hash != y.hash || x.size != y.size) return false;
  switch (logion::arity(x.op)) {
  case 0: return x.name == y.name;
  case 1: return x.kids[0] == y.kids[0];
  default: return x.kids[0] == y.kids[0] && x.kids[1] == y.kids[1];
  }
}

Formula make_not(Formula f) { return Formula::unary(Op::Not, std::move(f)); }
Formula make_and(Formula a, Formula b) { return Formula::binary(Op::And, std::move(a), std::move(b)); }
Formula make_or(Formula a, Formula b) { return Formula::binary(Op::Or, std::move(a), std::move(b)); }

Formula conjunction(std::span<const Formula> parts) {
  if (parts.empty()) return Formula::constant(true);
  Formula result = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) result = make_and(*it, result);
  return result;
}

namespace {

void print_into(const Formula& f, std::string& out) {
  switch (f.arity()) {
  case 0:
    if (f.op() == Op::Var) out += f.name();
    else out += symbol(f.op());
    break;
  case 1:
    out += symbol(f.op());
    out += ' ';
    print_into(f.lhs(), out);
    break;
  default:
    out += '(';
    print_into(f.lhs(), out);
    out += ' ';
    out += symbol(f.op());
    out += ' ';
    print_into(f.rhs(), out);
    out += ')';
    break;
  }
}

void collect(const Formula& f, Path& path, std::vector<Subformula>& out) {
  out.push_back({f, path});
  for (int i = 0; i < f.arity(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    collect(f.child(i), path, out);
    path.pop_back();
  }
}

void collect_vars(const Formula& f, Vocabulary& out) {
  if (f.op() == Op::Var) out.insert(f.name());
  for (int i = 0; i < f.arity(); ++i) collect_vars(f.child(i), out);
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  out.reserve(f.size() * 4);
  print_into(f, out);
  return out;
}

std::vector<Subformula> subformulae(const Formula& f) {
  std::vector<Subformula> out;
  out.reserve(f.size());
  Path path;
  collect(f, path, out);
  return out;
}

const Formula& at(const Formula& f, std::span<const std::uint8_t> path) {
  const Formula* node = &f;
  for (auto step : path) node = &node->child(step);
  return *node;
}

Formula replace_at(const Formula& f, std::span<const std::uint8_t> path, const Formula& replacement) {
  if (path.empty()) return replacement;
  auto rest = path.subspan(1);
  auto step = path.front();
  if (f.arity() == 1) {
    if (step != 0) throw std::out_of_range("invalid path");
    return Formula::unary(f.op(), replace_at(f.lhs(), rest, replacement));
  }
  if (f.arity() == 2) {
    if (step == 0) return Formula::binary(f.op(), replace_at(f.lhs(), rest, replacement), f.rhs());
    if (step == 1) return Formula::binary(f.op(), f.lhs(), replace_at(f.rhs(), rest, replacement));
  }
  throw std::out_of_range("invalid path");
}

Vocabulary variables(const Formula& f) {
  Vocabulary out;
  collect_vars(f, out);
  return out;
}

bool is_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  for (char c : text)
    if (!alpha(c) && !digit(c)) return false;
  static constexpr std::array<std::string_view, 8> reserved = {"true", "false", "X", "F", "G", "U", "R", "W"};
  for (auto word : reserved)
    if (text == word) return false;
  return true;
}

}  // namespace logion
