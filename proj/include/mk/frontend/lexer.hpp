#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mk/error.hpp"

namespace mk::frontend {

struct Token {
  enum class Kind {
    Word,  // [A-Za-z0-9_]+ : names, atom labels, integer literals
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Colon,
    Equals,
    Star,
    Slash,
    Arrow,
    Minus,
    End,
  };

  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string_view tokenKindName(Token::Kind kind);

/// Splits `text` into tokens. `#` starts a comment running to end of line.
/// Decimal literals are rejected with SyntaxError.
std::vector<Token> tokenize(std::string_view text);

/// Error carrying a source position.
[[noreturn]] void failAt(ErrorCode code, const Token& at, const std::string& message);

/// Cursor over a token vector with the usual expect/accept helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool atEnd() const { return peek().kind == Token::Kind::End; }
  bool accept(Token::Kind kind);
  const Token& expect(Token::Kind kind, std::string_view context);
  const Token& expectWord(std::string_view context);
  void expectKeyword(std::string_view keyword);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace mk::frontend
