#include "speclab/parser.hpp"

#include <cctype>
#include <vector>

#include "speclab/errors.hpp"

namespace speclab {
namespace {

enum class Tok {
  End,
  LParen,
  RParen,
  Bang,
  AndAnd,
  OrOr,
  Arrow,
  Iff,
  True,
  False,
  Ident,
  OpX,
  OpU,
  OpR,
  OpW,
  OpF,
  OpG,
};

struct Token {
  Tok type;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line_, column_});
        return out;
      }
      int line = line_;
      int col = column_;
      char c = text_[pos_];
      if (c == '(') {
        advance();
        out.push_back({Tok::LParen, "(", line, col});
      } else if (c == ')') {
        advance();
        out.push_back({Tok::RParen, ")", line, col});
      } else if (c == '!') {
        advance();
        out.push_back({Tok::Bang, "!", line, col});
      } else if (c == '&') {
        expect_pair('&', line, col);
        out.push_back({Tok::AndAnd, "&&", line, col});
      } else if (c == '|') {
        expect_pair('|', line, col);
        out.push_back({Tok::OrOr, "||", line, col});
      } else if (c == '-') {
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '>')
          throw ParseError("expected '>' after '-'", line, col);
        advance();
        out.push_back({Tok::Arrow, "->", line, col});
      } else if (c == '<') {
        advance();
        if (pos_ + 1 >= text_.size() || text_[pos_] != '-' ||
            text_[pos_ + 1] != '>')
          throw ParseError("expected '<->'", line, col);
        advance();
        advance();
        out.push_back({Tok::Iff, "<->", line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          word.push_back(text_[pos_]);
          advance();
        }
        out.push_back({keyword(word), word, line, col});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
      }
    }
  }

 private:
  static Tok keyword(const std::string& word) {
    if (word == "true") return Tok::True;
    if (word == "false") return Tok::False;
    if (word == "X") return Tok::OpX;
    if (word == "U") return Tok::OpU;
    if (word == "R") return Tok::OpR;
    if (word == "W") return Tok::OpW;
    if (word == "F") return Tok::OpF;
    if (word == "G") return Tok::OpG;
    return Tok::Ident;
  }

  void expect_pair(char c, int line, int col) {
    advance();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + c + "'", line, col);
    advance();
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
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

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens,
         const std::optional<std::set<std::string>>& vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  Formula run() {
    Formula f = implication();
    if (peek().type != Tok::End)
      throw ParseError("unexpected token '" + peek().text + "'", peek().line,
                       peek().column);
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (peek().type == Tok::Arrow) {
      next();
      return Formula::Implies(lhs, implication());
    }
    if (peek().type == Tok::Iff) {
      next();
      Formula rhs = implication();
      return Formula::And(Formula::Implies(lhs, rhs),
                          Formula::Implies(rhs, lhs));
    }
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (peek().type == Tok::OrOr) {
      next();
      acc = Formula::Or(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = binary_temporal();
    while (peek().type == Tok::AndAnd) {
      next();
      acc = Formula::And(acc, binary_temporal());
    }
    return acc;
  }

  Formula binary_temporal() {
    Formula lhs = unary();
    switch (peek().type) {
      case Tok::OpU:
        next();
        return Formula::U(lhs, binary_temporal());
      case Tok::OpR:
        next();
        return Formula::R(lhs, binary_temporal());
      case Tok::OpW:
        next();
        return Formula::W(lhs, binary_temporal());
      default:
        return lhs;
    }
  }

  Formula unary() {
    switch (peek().type) {
      case Tok::Bang:
        next();
        return Formula::Not(unary());
      case Tok::OpX:
        next();
        return Formula::X(unary());
      case Tok::OpF:
        next();
        return Formula::F(unary());
      case Tok::OpG:
        next();
        return Formula::G(unary());
      default:
        return primary();
    }
  }

  Formula primary() {
    Token t = peek();
    switch (t.type) {
      case Tok::True:
        next();
        return Formula::tt();
      case Tok::False:
        next();
        return Formula::ff();
      case Tok::Ident:
        next();
        if (vocab_ && vocab_->count(t.text) == 0)
          throw ParseError("unknown proposition '" + t.text + "'", t.line,
                           t.column);
        return Formula::ap(t.text);
      case Tok::LParen: {
        next();
        Formula f = implication();
        if (peek().type != Tok::RParen)
          throw ParseError("expected ')'", peek().line, peek().column);
        next();
        return f;
      }
      default:
        throw ParseError("expected a formula, found '" +
                             (t.type == Tok::End ? "end of input" : t.text) +
                             "'",
                         t.line, t.column);
    }
  }

  const Token& peek() const { return tokens_[index_]; }
  void next() { ++index_; }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  const std::optional<std::set<std::string>>& vocab_;
};

}  // namespace

Formula parse(std::string_view text,
              const std::optional<std::set<std::string>>& vocab) {
  Lexer lexer(text);
  Parser parser(lexer.run(), vocab);
  return parser.run();
}

}  // namespace speclab
