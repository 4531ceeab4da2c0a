#include "mpga/script/lexer.hpp"

#include <cctype>
#include <cstdlib>

namespace mpga::script {

const char* diag_code_name(DiagCode code) {
  switch (code) {
    case DiagCode::lexical:
      return "lexical";
    case DiagCode::syntax:
      return "syntax";
    case DiagCode::unknown_identifier:
      return "unknown-identifier";
    case DiagCode::arity:
      return "arity";
  }
  return "?";
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool all_digits(const std::string& s) {
  for (char c : s)
    if (!is_digit(c)) return false;
  return !s.empty();
}

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](TokenKind kind, std::string tok_text, int tok_line,
                  int tok_col, double value = 0.0) {
    out.push_back({kind, std::move(tok_text), value, tok_line, tok_col});
  };

  while (i < n) {
    const char c = text[i];
    const int at_line = line, at_col = col;
    if (c == '\n') {
      push(TokenKind::newline, "\n", at_line, at_col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(text[i + 1]))) {
      std::size_t j = i;
      while (j < n && is_digit(text[j])) ++j;
      if (j < n && text[j] == '.') {
        ++j;
        while (j < n && is_digit(text[j])) ++j;
      }
      // Signed exponent only: 2e1 is "2 * e1" territory, not 20.
      if (j + 2 < n && (text[j] == 'e' || text[j] == 'E') &&
          (text[j + 1] == '+' || text[j + 1] == '-') && is_digit(text[j + 2])) {
        j += 2;
        while (j < n && is_digit(text[j])) ++j;
      }
      const std::string lit = text.substr(i, j - i);
      push(TokenKind::number, lit, at_line, at_col, std::strtod(lit.c_str(), nullptr));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < n && is_ident_char(text[j])) ++j;
      const std::string word = text.substr(i, j - i);
      if (word == "x")
        push(TokenKind::cross, word, at_line, at_col);
      else if (word == "print")
        push(TokenKind::kw_print, word, at_line, at_col);
      else if (word.size() > 1 && word[0] == 'e' && all_digits(word.substr(1)))
        push(TokenKind::blade, word.substr(1), at_line, at_col);
      else
        push(TokenKind::ident, word, at_line, at_col);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+':
        kind = TokenKind::plus;
        break;
      case '-':
        kind = TokenKind::minus;
        break;
      case '*':
        kind = TokenKind::star;
        break;
      case '/':
        kind = TokenKind::slash;
        break;
      case '^':
        kind = TokenKind::caret;
        break;
      case '.':
        kind = TokenKind::dot;
        break;
      case '&':
        kind = TokenKind::amp;
        break;
      case '=':
        kind = TokenKind::assign;
        break;
      case '(':
        kind = TokenKind::lparen;
        break;
      case ')':
        kind = TokenKind::rparen;
        break;
      case ',':
        kind = TokenKind::comma;
        break;
      default:
        throw ParseError(DiagCode::lexical, at_line, at_col,
                         std::string("unexpected character '") + c + "'");
    }
    push(kind, std::string(1, c), at_line, at_col);
    ++i;
    ++col;
  }
  push(TokenKind::end, "", line, col);
  return out;
}

}  // namespace mpga::script
