#include "redpow/dsl/lexer.hpp"

#include <cctype>

namespace redpow::dsl {

ParseError::ParseError(ErrorCode code, SourceLoc loc, const std::string& message,
                       std::vector<std::string> expected)
    : Error(code, std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message),
      loc_(loc), message_(message), expected_(std::move(expected)) {}

std::string describe(Tok kind) {
  switch (kind) {
  case Tok::Ident: return "name";
  case Tok::Int: return "integer";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::LBracket: return "'['";
  case Tok::RBracket: return "']'";
  case Tok::LBrace: return "'{'";
  case Tok::RBrace: return "'}'";
  case Tok::Comma: return "','";
  case Tok::Colon: return "':'";
  case Tok::Semicolon: return "';'";
  case Tok::Plus: return "'+'";
  case Tok::Minus: return "'-'";
  case Tok::Star: return "'*'";
  case Tok::Slash: return "'/'";
  case Tok::Caret: return "'^'";
  case Tok::Equals: return "'='";
  case Tok::Amp: return "'&'";
  case Tok::Pipe: return "'|'";
  case Tok::Backslash: return "'\\'";
  case Tok::Bang: return "'!'";
  case Tok::Arrow: return "'->'";
  case Tok::DotDot: return "'..'";
  case Tok::Newline: return "end of line";
  case Tok::End: return "end of input";
  }
  return "?";
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
  case Tok::Ident: return "'" + tok.text + "'";
  case Tok::Int: return "integer " + tok.text;
  default: return describe(tok.kind);
  }
}

std::vector<Token> lex(std::string_view source) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  int depth = 0;
  std::size_t i = 0;

  auto push = [&](Tok kind, std::string text, SourceLoc loc) {
    out.push_back({kind, std::move(text), loc});
  };

  while (i < source.size()) {
    const char ch = source[i];
    const SourceLoc loc{line, column};
    if (ch == '\n') {
      if (depth == 0 && !out.empty() && out.back().kind != Tok::Newline)
        push(Tok::Newline, "", loc);
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++column;
      continue;
    }
    if (ch == '#') {
      while (i < source.size() && source[i] != '\n') {
        ++i;
        ++column;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < source.size() &&
             (std::isalnum(static_cast<unsigned char>(source[j])) || source[j] == '_'))
        ++j;
      push(Tok::Ident, std::string(source.substr(i, j - i)), loc);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j])))
        ++j;
      if (j - i > 18)
        throw ParseError(ErrorCode::SyntaxError, loc, "integer literal too large");
      push(Tok::Int, std::string(source.substr(i, j - i)), loc);
      column += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char next) { return i + 1 < source.size() && source[i + 1] == next; };
    Tok kind;
    std::size_t width = 1;
    switch (ch) {
    case '(': kind = Tok::LParen; ++depth; break;
    case ')': kind = Tok::RParen; depth = depth > 0 ? depth - 1 : 0; break;
    case '[': kind = Tok::LBracket; ++depth; break;
    case ']': kind = Tok::RBracket; depth = depth > 0 ? depth - 1 : 0; break;
    case '{': kind = Tok::LBrace; break;
    case '}': kind = Tok::RBrace; break;
    case ',': kind = Tok::Comma; break;
    case ':': kind = Tok::Colon; break;
    case ';': kind = Tok::Semicolon; break;
    case '+': kind = Tok::Plus; break;
    case '*': kind = Tok::Star; break;
    case '/': kind = Tok::Slash; break;
    case '^': kind = Tok::Caret; break;
    case '=': kind = Tok::Equals; break;
    case '&': kind = Tok::Amp; break;
    case '|': kind = Tok::Pipe; break;
    case '\\': kind = Tok::Backslash; break;
    case '!': kind = Tok::Bang; break;
    case '-':
      kind = two('>') ? Tok::Arrow : Tok::Minus;
      width = two('>') ? 2 : 1;
      break;
    case '.':
      if (!two('.'))
        throw ParseError(ErrorCode::SyntaxError, loc, "unexpected character '.'");
      kind = Tok::DotDot;
      width = 2;
      break;
    default: {
      std::string shown = (static_cast<unsigned char>(ch) < 0x20 || static_cast<unsigned char>(ch) >= 0x7f)
                              ? "byte " + std::to_string(static_cast<unsigned char>(ch))
                              : std::string("'") + ch + "'";
      throw ParseError(ErrorCode::SyntaxError, loc, "unexpected character " + shown);
    }
    }
    push(kind, std::string(source.substr(i, width)), loc);
    i += width;
    column += static_cast<int>(width);
  }
  push(Tok::End, "", SourceLoc{line, column});
  return out;
}

} // namespace redpow::dsl
