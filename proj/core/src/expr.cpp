#include "puiseux/expr.hpp"

#include <cctype>
#include <variant>
#include <vector>

#include "puiseux/errors.hpp"

namespace puiseux {

struct Expr::Node {
  enum class Op { literal, var_n, var_p, add, sub, mul, neg, floordiv };
  Op op = Op::literal;
  mpz_class literal;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Op = Expr::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, mpz_class literal = 0) {
  auto node = std::make_shared<Expr::Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  node->literal = std::move(literal);
  return node;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("numerator expression '" + std::string(text_) + "': " + what, 1, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr node = term();
    for (;;) {
      if (accept("+")) {
        node = make(Op::add, node, term());
      } else if (accept("-")) {
        node = make(Op::sub, node, term());
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    NodePtr node = unary();
    while (accept("*")) node = make(Op::mul, node, unary());
    return node;
  }

  NodePtr unary() {
    if (accept("-")) return make(Op::neg, unary());
    return postfix();
  }

  NodePtr postfix() {
    NodePtr node = primary();
    while (accept("//")) {
      skip_ws();
      mpz_class divisor = integer();
      if (divisor == 0) fail("floor division by zero");
      node = make(Op::floordiv, node, make(Op::literal, nullptr, nullptr, divisor));
    }
    return node;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer literal");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return make(Op::literal, nullptr, nullptr, integer());
    }
    if (c == 'n') {
      ++pos_;
      return make(Op::var_n);
    }
    if (c == 'p') {
      ++pos_;
      return make(Op::var_p);
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

mpz_class eval(const Expr::Node& node, const mpz_class& n, const mpz_class& p) {
  switch (node.op) {
    case Op::literal:
      return node.literal;
    case Op::var_n:
      return n;
    case Op::var_p:
      return p;
    case Op::add:
      return eval(*node.lhs, n, p) + eval(*node.rhs, n, p);
    case Op::sub:
      return eval(*node.lhs, n, p) - eval(*node.rhs, n, p);
    case Op::mul:
      return eval(*node.lhs, n, p) * eval(*node.rhs, n, p);
    case Op::neg:
      return -eval(*node.lhs, n, p);
    case Op::floordiv: {
      mpz_class out;
      const mpz_class num = eval(*node.lhs, n, p);
      mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), node.rhs->literal.get_mpz_t());
      return out;
    }
  }
  return 0;
}

bool mentions(const Expr::Node& node, Op var) {
  if (node.op == var) return true;
  if (node.lhs && mentions(*node.lhs, var)) return true;
  return node.rhs && mentions(*node.rhs, var);
}

}  // namespace

Expr::Expr() : root_(make(Op::literal)), text_("0") {}

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.root_ = Parser(text).parse();
  e.text_ = std::string(text);
  return e;
}

mpz_class Expr::evaluate(const mpz_class& n, const mpz_class& p) const {
  return eval(*root_, n, p);
}

bool Expr::is_constant() const {
  return !mentions(*root_, Op::var_n) && !mentions(*root_, Op::var_p);
}

bool Expr::uses_prime() const { return mentions(*root_, Op::var_p); }

}  // namespace puiseux
