#pragma once

#include <memory>
#include <string>

#include "nichols/green.hpp"

namespace nichols {

// expr   := term ('+' term)*
// term   := factor ('*' factor)*
// factor := INT '*' factor | 'dual' '(' expr ')' | label | '(' expr ')'
struct Expr {
  enum class Kind { Atom, Dual, Tensor, Sum, Scale };
  Kind kind = Kind::Atom;
  Label label;              // Atom
  long long factor = 0;     // Scale
  std::shared_ptr<const Expr> lhs, rhs;  // rhs unused for Dual and Scale

  friend bool operator==(const Expr& a, const Expr& b);
};
using ExprPtr = std::shared_ptr<const Expr>;

// Throws SyntaxError (with position) or InvalidLabel.
ExprPtr parse_expr(const std::string& text);
// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

Module eval_module(const Expr& e, AlgebraPtr alg);
// Closed-form evaluation; dual acts through the label-level dual map.
GreenElement eval_green(const Expr& e, const HopfAlgebra& alg);

}  // namespace nichols
