#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace puiseux {

/// Integer expression over the family index `n` and the family prime `p`.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | postfix
///   postfix:= primary ('//' INT)*        floor division by a positive literal
///   primary:= INT | 'n' | 'p' | '(' expr ')'
///
/// Whitespace is ignored. Values are arbitrary precision.
class Expr {
 public:
  struct Node;

  /// The constant 0.
  Expr();

  /// Throws SyntaxError (line 1, 1-based column into `text`).
  static Expr parse(std::string_view text);

  mpz_class evaluate(const mpz_class& n, const mpz_class& p) const;

  /// True when the expression mentions neither n nor p.
  bool is_constant() const;
  bool uses_prime() const;

  /// The text the expression was parsed from.
  const std::string& str() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace puiseux
