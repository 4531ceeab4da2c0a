#include "mpga/script/parser.hpp"

#include <array>
#include <map>
#include <set>

namespace mpga::script {

namespace {

/// Per-space call arities: {M2, M3, M4}; -1 marks a call missing from a
/// space.
const std::map<std::string, std::array<int, 3>> kCallTable = {
    {"point", {3, 4, 5}},
    {"line", {3, 6, 10}},
    {"plane", {-1, 4, 10}},
    {"hyperplane", {-1, -1, 5}},
    {"exp", {1, 1, 1}},
    {"apply", {2, 2, 2}},
    {"boost", {1, 2, 3}},
    {"rotate", {2, 2, 2}},
    {"translate", {2, 2, 2}},
    {"worldline", {-1, 2, 3}},
    {"distance", {2, 2, 2}},
    {"angle", {2, 2, 2}},
    {"area", {3, -1, -1}},
    {"volume", {-1, 4, -1}},
    {"decompose", {-1, 1, 1}},
    {"orbit", {5, 5, 5}},
    {"gamma", {1, 1, 1}},
    {"add_velocity", {2, 4, 6}},
    {"lorentz", {3, 5, 7}},
    {"norm", {1, 1, 1}},
    {"normalize", {1, 1, 1}},
    {"reverse", {1, 1, 1}},
    {"polar", {1, 1, 1}},
    {"dual", {1, 1, 1}},
    {"classify", {1, 1, 1}},
    {"grade", {2, 2, 2}},
    {"params", {1, 1, 1}},
    {"project", {2, 2, 2}},
    {"reject", {2, 2, 2}},
    {"reflect", {2, 2, 2}},
    {"scale", {3, 3, 3}},
    {"sqrt", {1, 1, 1}},
    {"abs", {1, 1, 1}},
    {"sinh", {1, 1, 1}},
    {"cosh", {1, 1, 1}},
    {"tanh", {1, 1, 1}},
    {"asinh", {1, 1, 1}},
    {"acosh", {1, 1, 1}},
    {"atanh", {1, 1, 1}},
};

int space_index(Space space) {
  switch (space) {
    case Space::M2:
      return 0;
    case Space::M3:
      return 1;
    default:
      return 2;
  }
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Space space)
      : tokens_(std::move(tokens)), space_(space),
        dim_(Signature::for_space(space).dim_total()) {}

  Script run() {
    Script script;
    skip_newlines();
    while (!at(TokenKind::end)) {
      script.statements.push_back(statement());
      if (!at(TokenKind::end))
        expect(TokenKind::newline, "newline after statement");
      skip_newlines();
    }
    return script;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool at(TokenKind k) const { return cur().kind == k; }
  Token take() { return tokens_[pos_++]; }

  void skip_newlines() {
    while (at(TokenKind::newline)) ++pos_;
  }

  [[noreturn]] void fail(DiagCode code, const Token& tok,
                         const std::string& what) const {
    throw ParseError(code, tok.line, tok.col, what);
  }

  Token expect(TokenKind k, const std::string& what) {
    if (!at(k)) fail(DiagCode::syntax, cur(), "expected " + what);
    return take();
  }

  Statement statement() {
    if (at(TokenKind::kw_print)) {
      Token kw = take();
      Statement s{Statement::Kind::print, "", expr(), kw.line, kw.col};
      return s;
    }
    Token name = expect(TokenKind::ident, "a binding or print statement");
    if (is_reserved_name(name.text))
      fail(DiagCode::syntax, name, "'" + name.text + "' is a reserved name");
    if (bound_.count(name.text))
      fail(DiagCode::syntax, name,
           "'" + name.text + "' is already bound (single assignment)");
    expect(TokenKind::assign, "'='");
    Statement s{Statement::Kind::binding, name.text, expr(), name.line,
                name.col};
    bound_.insert(name.text);
    return s;
  }

  ExprPtr expr() { return additive(); }

  ExprPtr binary(ExprPtr lhs, char op, ExprPtr rhs, const Token& tok) {
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::binary;
    node->op = op;
    node->line = tok.line;
    node->col = tok.col;
    node->args.push_back(std::move(lhs));
    node->args.push_back(std::move(rhs));
    return node;
  }

  ExprPtr additive() {
    ExprPtr lhs = joining();
    while (at(TokenKind::plus) || at(TokenKind::minus)) {
      Token op = take();
      lhs = binary(std::move(lhs), op.kind == TokenKind::plus ? '+' : '-',
                   joining(), op);
    }
    return lhs;
  }

  ExprPtr joining() {
    ExprPtr lhs = middle();
    while (at(TokenKind::amp)) {
      Token op = take();
      lhs = binary(std::move(lhs), '&', middle(), op);
    }
    return lhs;
  }

  ExprPtr middle() {
    ExprPtr lhs = multiplicative();
    while (at(TokenKind::caret) || at(TokenKind::dot) ||
           at(TokenKind::cross)) {
      Token op = take();
      const char glyph = op.kind == TokenKind::caret ? '^'
                         : op.kind == TokenKind::dot ? '.'
                                                     : 'x';
      lhs = binary(std::move(lhs), glyph, multiplicative(), op);
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (at(TokenKind::star) || at(TokenKind::slash)) {
      Token op = take();
      lhs = binary(std::move(lhs), op.kind == TokenKind::star ? '*' : '/',
                   unary(), op);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at(TokenKind::minus)) {
      Token op = take();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::unary_minus;
      node->line = op.line;
      node->col = op.col;
      node->args.push_back(unary());
      return node;
    }
    return primary();
  }

  ExprPtr primary() {
    if (at(TokenKind::number)) {
      Token tok = take();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::number;
      node->number = tok.number;
      node->line = tok.line;
      node->col = tok.col;
      return node;
    }
    if (at(TokenKind::blade)) {
      Token tok = take();
      for (char c : tok.text)
        if (c - '0' >= dim_)
          fail(DiagCode::syntax, tok,
               "basis index e" + std::string(1, c) + " does not exist in " +
                   Signature::for_space(space_).name());
      std::set<char> seen(tok.text.begin(), tok.text.end());
      if (seen.size() != tok.text.size())
        fail(DiagCode::syntax, tok, "repeated basis index in blade");
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::blade;
      node->name = tok.text;
      node->line = tok.line;
      node->col = tok.col;
      return node;
    }
    if (at(TokenKind::lparen)) {
      take();
      ExprPtr inner = expr();
      expect(TokenKind::rparen, "')'");
      return inner;
    }
    if (at(TokenKind::ident)) {
      Token tok = take();
      if (at(TokenKind::lparen)) return call(tok);
      if (tok.text == "pi") {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::number;
        node->number = 3.14159265358979323846;
        node->line = tok.line;
        node->col = tok.col;
        return node;
      }
      if (kCallTable.count(tok.text))
        fail(DiagCode::syntax, tok,
             "'" + tok.text + "' is a function and needs arguments");
      if (!bound_.count(tok.text))
        fail(DiagCode::unknown_identifier, tok,
             "unknown identifier '" + tok.text + "'");
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::ident;
      node->name = tok.text;
      node->line = tok.line;
      node->col = tok.col;
      return node;
    }
    fail(DiagCode::syntax, cur(), "expected an expression");
  }

  ExprPtr call(const Token& name) {
    auto it = kCallTable.find(name.text);
    if (it == kCallTable.end())
      fail(DiagCode::unknown_identifier, name,
           "unknown function '" + name.text + "'");
    const int arity = it->second[space_index(space_)];
    if (arity < 0)
      fail(DiagCode::arity, name,
           "'" + name.text + "' is not available in " +
               Signature::for_space(space_).name());
    expect(TokenKind::lparen, "'('");
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::call;
    node->name = name.text;
    node->line = name.line;
    node->col = name.col;
    if (!at(TokenKind::rparen)) {
      node->args.push_back(expr());
      while (at(TokenKind::comma)) {
        take();
        node->args.push_back(expr());
      }
    }
    expect(TokenKind::rparen, "')'");
    if (static_cast<int>(node->args.size()) != arity)
      fail(DiagCode::arity, name,
           "'" + name.text + "' takes " + std::to_string(arity) +
               " arguments in " + Signature::for_space(space_).name() +
               ", got " + std::to_string(node->args.size()));
    return node;
  }

  std::vector<Token> tokens_;
  Space space_;
  int dim_;
  std::size_t pos_ = 0;
  std::set<std::string> bound_;
};

}  // namespace

int call_arity(const std::string& name, Space space) {
  auto it = kCallTable.find(name);
  if (it == kCallTable.end()) return -1;
  return it->second[space_index(space)];
}

bool is_reserved_name(const std::string& name) {
  return name == "pi" || name == "print" || kCallTable.count(name) > 0;
}

Script parse(const std::string& text, Space space) {
  Parser parser(tokenize(text), space);
  return parser.run();
}

}  // namespace mpga::script
