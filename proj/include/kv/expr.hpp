#pragma once

#include <string>

#include "kv/ratfunc.hpp"

namespace kv {

// Textual coefficient expression over a fixed variable list.
struct ExprSource {
  std::string text;
  VarListPtr variables;
};

// Grammar: integer literals, variables, binary + - * /, ^ with a nonnegative
// integer literal exponent (no nesting), unary -, parentheses. Precedence
// ^ > unary- > * / > + -, left associative. Whitespace insignificant.
// Throws SyntaxError, UnknownVariable, NegativeExponent,
// ZeroDenominatorLiteral.
RatFunc parse_expr(const ExprSource& src);
RatFunc parse_expr(const std::string& text, const VarListPtr& variables);

// Deterministic printing; parse_expr(print_expr(f)) is rf_eq-equal to f.
std::string print_expr(const RatFunc& f);

}  // namespace kv
