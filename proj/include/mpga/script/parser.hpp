#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mpga/script/lexer.hpp"
#include "mpga/signature.hpp"

namespace mpga::script {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { number, blade, ident, unary_minus, binary, call };
  Kind kind;
  double number = 0.0;
  std::string name;  // identifier, call name, or blade digit string
  char op = 0;       // one of + - * / ^ . x &
  std::vector<ExprPtr> args;
  int line = 1;
  int col = 1;
};

struct Statement {
  enum class Kind { binding, print };
  Kind kind;
  std::string name;  // binding target
  ExprPtr expr;
  int line = 1;
  int col = 1;
};

struct Script {
  std::vector<Statement> statements;
};

/// Fixed arity of a call in the given space, or -1 when the name is not a
/// call at all; raises for known calls that do not exist in the space.
int call_arity(const std::string& name, Space space);
bool is_reserved_name(const std::string& name);

/// LL(1) parse with precedence unary > * / > ^ . x > & > + -. Blade
/// indices are validated against the space dimension; identifier uses must
/// follow their binding, each name is bound once, and call arities are
/// checked against the fixed table.
Script parse(const std::string& text, Space space);

}  // namespace mpga::script
