#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mpga::script {

enum class DiagCode { lexical, syntax, unknown_identifier, arity };

/// Script-level diagnostic with a source position; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(DiagCode code, int line, int col, const std::string& what)
      : std::runtime_error(what), code_(code), line_(line), col_(col) {}
  DiagCode code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  DiagCode code_;
  int line_;
  int col_;
};

const char* diag_code_name(DiagCode code);

enum class TokenKind {
  number,
  blade,   // e followed by digits, arbitrary index order
  ident,
  kw_print,
  plus,
  minus,
  star,
  slash,
  caret,
  dot,
  cross,  // the commutator glyph `x`; not available as an identifier
  amp,
  assign,
  lparen,
  rparen,
  comma,
  newline,
  end,
};

struct Token {
  TokenKind kind;
  std::string text;
  double number = 0.0;
  int line = 1;
  int col = 1;
};

/// Tokenizes a script. Comments run from '#' to end of line. Numeric
/// literals are plain decimals; an exponent is accepted only with an
/// explicit sign (1e-3) so that blade tokens like e1 stay unambiguous.
std::vector<Token> tokenize(const std::string& text);

}  // namespace mpga::script
