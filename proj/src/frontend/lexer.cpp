#include "mk/frontend/lexer.hpp"

#include <cctype>

namespace mk::frontend {

std::string_view tokenKindName(Token::Kind kind) {
  switch (kind) {
    case Token::Kind::Word: return "name";
    case Token::Kind::LBrace: return "'{'";
    case Token::Kind::RBrace: return "'}'";
    case Token::Kind::LParen: return "'('";
    case Token::Kind::RParen: return "')'";
    case Token::Kind::Comma: return "','";
    case Token::Kind::Colon: return "':'";
    case Token::Kind::Equals: return "'='";
    case Token::Kind::Star: return "'*'";
    case Token::Kind::Slash: return "'/'";
    case Token::Kind::Arrow: return "'->'";
    case Token::Kind::Minus: return "'-'";
    case Token::Kind::End: return "end of input";
  }
  return "?";
}

void failAt(ErrorCode code, const Token& at, const std::string& message) {
  throw Error(code, "line " + std::to_string(at.line) + ", column " +
                        std::to_string(at.column) + ": " + message);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto isWordChar = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = column;
    if (isWordChar(c)) {
      const std::size_t start = i;
      while (i < text.size() && isWordChar(text[i])) ++i;
      if (i < text.size() && text[i] == '.') {
        tok.text = std::string(text.substr(start, i - start));
        failAt(ErrorCode::SyntaxError, tok,
               "decimal literals are not accepted; write weights as p/q");
      }
      tok.kind = Token::Kind::Word;
      tok.text = std::string(text.substr(start, i - start));
      column += i - start;
      out.push_back(std::move(tok));
      continue;
    }
    std::size_t width = 1;
    switch (c) {
      case '{': tok.kind = Token::Kind::LBrace; break;
      case '}': tok.kind = Token::Kind::RBrace; break;
      case '(': tok.kind = Token::Kind::LParen; break;
      case ')': tok.kind = Token::Kind::RParen; break;
      case ',': tok.kind = Token::Kind::Comma; break;
      case ':': tok.kind = Token::Kind::Colon; break;
      case '=': tok.kind = Token::Kind::Equals; break;
      case '*': tok.kind = Token::Kind::Star; break;
      case '/': tok.kind = Token::Kind::Slash; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          tok.kind = Token::Kind::Arrow;
          width = 2;
        } else {
          tok.kind = Token::Kind::Minus;
        }
        break;
      case '.':
        failAt(ErrorCode::SyntaxError, tok,
               "decimal literals are not accepted; write weights as p/q");
      default:
        failAt(ErrorCode::SyntaxError, tok, std::string("unexpected character '") + c + "'");
    }
    tok.text = std::string(text.substr(i, width));
    i += width;
    column += width;
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  const std::size_t at = pos_ + ahead;
  return at < tokens_.size() ? tokens_[at] : tokens_.back();
}

const Token& TokenStream::next() {
  const Token& t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::accept(Token::Kind kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& TokenStream::expect(Token::Kind kind, std::string_view context) {
  if (peek().kind != kind) {
    failAt(ErrorCode::SyntaxError, peek(),
           "expected " + std::string(tokenKindName(kind)) + " " + std::string(context) +
               ", found " +
               (peek().kind == Token::Kind::Word ? "'" + peek().text + "'"
                                                 : std::string(tokenKindName(peek().kind))));
  }
  return next();
}

const Token& TokenStream::expectWord(std::string_view context) {
  return expect(Token::Kind::Word, context);
}

void TokenStream::expectKeyword(std::string_view keyword) {
  const Token& t = peek();
  if (t.kind != Token::Kind::Word || t.text != keyword) {
    failAt(ErrorCode::SyntaxError, t,
           "expected '" + std::string(keyword) + "', found " +
               (t.kind == Token::Kind::Word ? "'" + t.text + "'"
                                            : std::string(tokenKindName(t.kind))));
  }
  next();
}

}  // namespace mk::frontend
