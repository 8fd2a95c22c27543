#include "hornsat/parser.hpp"

#include <array>
#include <cctype>

namespace hornsat {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string found,
                       std::vector<std::string> expected)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": unexpected " + found + "; expected " + join_expected(expected)),
      line_(line),
      column_(column),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, False, True, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Spelling {
  std::string_view text;
  Tok kind;
};

// Longest spellings first so that "<->" wins over "->" and so on.
constexpr std::array<Spelling, 17> kSpellings{{
    {"<->", Tok::Iff},
    {"↔", Tok::Iff},
    {"->", Tok::Implies},
    {"→", Tok::Implies},
    {"/\\", Tok::And},
    {"\\/", Tok::Or},
    {"∧", Tok::And},
    {"∨", Tok::Or},
    {"¬", Tok::Not},
    {"⊥", Tok::False},
    {"⊤", Tok::True},
    {"&", Tok::And},
    {"|", Tok::Or},
    {"~", Tok::Not},
    {"!", Tok::Not},
    {"(", Tok::LParen},
    {")", Tok::RParen},
}};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "end of input", line_, column_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance(1);
    }
  }

  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i, ++pos_) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  Token next() {
    const std::size_t line = line_;
    const std::size_t column = column_;
    const std::string_view rest = text_.substr(pos_);
    for (const Spelling& s : kSpellings) {
      if (rest.substr(0, s.text.size()) == s.text) {
        advance(s.text.size());
        return {s.kind, "'" + std::string(s.text) + "'", line, column};
      }
    }
    if (std::isalpha(static_cast<unsigned char>(rest.front()))) {
      std::size_t n = 1;
      while (n < rest.size() &&
             (std::isalnum(static_cast<unsigned char>(rest[n])) || rest[n] == '_')) {
        ++n;
      }
      std::string word(rest.substr(0, n));
      advance(n);
      if (word == "false" || word == "bot") return {Tok::False, word, line, column};
      if (word == "true" || word == "top") return {Tok::True, word, line, column};
      return {Tok::Ident, word, line, column};
    }
    // Report the whole code point so the message stays valid UTF-8.
    std::size_t n = 1;
    while (n < rest.size() && (static_cast<unsigned char>(rest[n]) & 0xC0) == 0x80) ++n;
    throw ParseError(line, column, "character '" + std::string(rest.substr(0, n)) + "'",
                     {"a formula token"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const std::vector<std::string>& operand_start() {
  static const std::vector<std::string> v{"identifier", "constant", "'~'", "'('"};
  return v;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = iff();
    if (peek().kind != Tok::End) fail_after_operand(false);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, t.text, std::move(expected));
  }

  [[noreturn]] void fail_after_operand(bool inside_parens) const {
    std::vector<std::string> expected{"'&'", "'|'", "'->'", "'<->'"};
    expected.push_back(inside_parens ? "')'" : "end of input");
    fail(std::move(expected));
  }

  Formula iff() {
    Formula lhs = implies();
    if (accept(Tok::Iff)) return Formula::equivalence(lhs, iff());
    return lhs;
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) return Formula::implication(lhs, implies());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept(Tok::Or)) acc = Formula::disjunction(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept(Tok::And)) acc = Formula::conjunction(acc, unary());
    return acc;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    switch (peek().kind) {
      case Tok::Ident:
        return Formula::atom(take().text);
      case Tok::False:
        take();
        return Formula::falsum();
      case Tok::True:
        take();
        return Formula::verum();
      case Tok::LParen: {
        take();
        Formula inner = iff();
        if (!accept(Tok::RParen)) fail_after_operand(true);
        return inner;
      }
      default:
        fail(operand_start());
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

}  // namespace hornsat
