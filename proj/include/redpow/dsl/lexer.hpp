#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "redpow/error.hpp"

namespace redpow::dsl {

/// 1-based position in the source. Compares equal to every other location
/// so that AST equality is purely structural.
struct SourceLoc {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Semicolon,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Equals,
  Amp,
  Pipe,
  Backslash,
  Bang,
  Arrow,
  DotDot,
  Newline,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

/// Syntax, name and type errors, all positioned.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, SourceLoc loc, const std::string& message,
             std::vector<std::string> expected = {});

  int line() const noexcept { return loc_.line; }
  int column() const noexcept { return loc_.column; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

private:
  SourceLoc loc_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Quoted spelling used in diagnostics, e.g. "'->'" or "end of line".
std::string describe(Tok kind);
std::string describe(const Token& tok);

/// Splits source text into tokens. `#` starts a comment running to the end
/// of the line; line breaks inside (...) and [...] are not reported.
std::vector<Token> lex(std::string_view source);

} // namespace redpow::dsl
