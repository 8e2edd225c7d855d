#include "logion/parser.hpp"

#include <sstream>

namespace logion {

namespace {

std::string describe(ParseError::Kind kind, std::size_t line, std::size_t column,
                     const std::vector<std::string>& expected, const std::string& message) {
  std::ostringstream out;
  out << line << ':' << column << ": " << message;
  if (kind == ParseError::Kind::Syntax && !expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) out << (i ? ", " : "") << expected[i];
    out << ')';
  }
  return out.str();
}

enum class Tok {
  Ident,
  True,
  False,
  Not,
  Next,
  Eventually,
  Always,
  And,
  Or,
  Implies,
  Until,
  Release,
  WeakUntil,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const std::vector<std::string> kOperandStart = {"identifier", "true", "false", "(", "!", "X", "F", "G"};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      auto line = line_, column = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "end of input", line, column});
        return out;
      }
      char c = text_[pos_];
      if (is_word_start(c)) {
        auto start = pos_;
        while (pos_ < text_.size() && is_word_char(text_[pos_])) advance();
        std::string word(text_.substr(start, pos_ - start));
        out.push_back({keyword(word), word, line, column});
        continue;
      }
      auto emit = [&](Tok kind, std::size_t width) {
        out.push_back({kind, std::string(text_.substr(pos_, width)), line, column});
        for (std::size_t i = 0; i < width; ++i) advance();
      };
      switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '!': emit(Tok::Not, 1); continue;
      case '&': emit(Tok::And, peek(1) == '&' ? 2 : 1); continue;
      case '|': emit(Tok::Or, peek(1) == '|' ? 2 : 1); continue;
      case '-':
        if (peek(1) == '>') {
          emit(Tok::Implies, 2);
          continue;
        }
        break;
      case '<':
        if (peek(1) == '>') {
          emit(Tok::Eventually, 2);
          continue;
        }
        break;
      case '[':
        if (peek(1) == ']') {
          emit(Tok::Always, 2);
          continue;
        }
        break;
      default:
        break;
      }
      // Longest run of punctuation makes the diagnostic readable ("<->", "~").
      auto start = pos_;
      while (pos_ < text_.size() && is_punct(text_[pos_])) ++pos_;
      if (pos_ == start) ++pos_;
      std::string op(text_.substr(start, pos_ - start));
      throw ParseError(ParseError::Kind::UnknownOperator, line, column, {}, "unknown operator '" + op + "'");
    }
  }

private:
  static bool is_word_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_word_char(char c) { return is_word_start(c) || (c >= '0' && c <= '9'); }
  static bool is_punct(char c) {
    return !is_word_char(c) && c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '(' && c != ')';
  }

  static Tok keyword(const std::string& word) {
    if (word == "true") return Tok::True;
    if (word == "false") return Tok::False;
    if (word == "X") return Tok::Next;
    if (word == "F") return Tok::Eventually;
    if (word == "G") return Tok::Always;
    if (word == "U") return Tok::Until;
    if (word == "R") return Tok::Release;
    if (word == "W") return Tok::WeakUntil;
    return Tok::Ident;
  }

  char peek(std::size_t offset) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : tokens_(std::move(tokens)), options_(options) {}

  Formula run() {
    auto f = implication();
    if (peek().kind != Tok::End) fail({"end of input", "&", "|", "->", "U", "R", "W"});
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const auto& t = peek();
    throw ParseError(ParseError::Kind::Syntax, t.line, t.column, std::move(expected),
                     "unexpected " + (t.kind == Tok::End ? t.text : "'" + t.text + "'"));
  }

  Formula implication() {
    auto lhs = disjunction();
    if (peek().kind != Tok::Implies) return lhs;
    next();
    auto rhs = implication();
    if (options_.desugar_implication) return make_or(make_not(std::move(lhs)), std::move(rhs));
    return Formula::binary(Op::Implies, std::move(lhs), std::move(rhs));
  }

  Formula disjunction() {
    auto f = conjunction();
    while (peek().kind == Tok::Or) {
      next();
      f = make_or(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    auto f = temporal();
    while (peek().kind == Tok::And) {
      next();
      f = make_and(std::move(f), temporal());
    }
    return f;
  }

  Formula temporal() {
    auto lhs = unary();
    Op op;
    switch (peek().kind) {
    case Tok::Until: op = Op::Until; break;
    case Tok::Release: op = Op::Release; break;
    case Tok::WeakUntil: op = Op::WeakUntil; break;
    default: return lhs;
    }
    next();
    return Formula::binary(op, std::move(lhs), temporal());
  }

  Formula unary() {
    Op op;
    switch (peek().kind) {
    case Tok::Not: op = Op::Not; break;
    case Tok::Next: op = Op::Next; break;
    case Tok::Eventually: op = Op::Eventually; break;
    case Tok::Always: op = Op::Always; break;
    default: return primary();
    }
    next();
    return Formula::unary(op, unary());
  }

  Formula primary() {
    const auto& t = peek();
    switch (t.kind) {
    case Tok::True: next(); return Formula::constant(true);
    case Tok::False: next(); return Formula::constant(false);
    case Tok::Ident: {
      if (options_.vocabulary && !options_.vocabulary->contains(t.text))
        throw ParseError(ParseError::Kind::UndeclaredVariable, t.line, t.column, {},
                         "undeclared variable '" + t.text + "'");
      next();
      return Formula::var(t.text);
    }
    case Tok::LParen: {
      next();
      auto f = implication();
      if (peek().kind != Tok::RParen) fail({")", "&", "|", "->", "U", "R", "W"});
      next();
      return f;
    }
    default:
      fail(kOperandStart);
    }
  }

  std::vector<Token> tokens_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error(describe(kind, line, column, expected, message)),
      kind_(kind),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Formula parse(std::string_view text, const ParseOptions& options) {
  return Parser(Lexer(text).run(), options).run();
}

}  // namespace logion
