#pragma once

#include "surreal/arena.hpp"
#include "surreal/dyadic.hpp"
#include "surreal/signexp.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surreal {

enum class ExprKind {
  Integer,  // text: decimal digits
  Dyadic,   // text: "p/q" or "p/2^k" as written
  Signs,    // text: the +/- string after "s:"
  Cut,      // args: left options, then right options
  Neg,
  Add,
  Sub,
  Mul,
  Lt,
  Leq,
  Eq,
  Apart,
  Call,  // text: value, sign, birthday or canon
};

struct Expr {
  ExprKind kind = ExprKind::Integer;
  std::string text;
  std::vector<Expr> args;
  std::size_t left_count = 0;  // Cut only
  std::size_t position = 0;    // offset of the first character in the input

  // Structural equality; positions are ignored.
  bool operator==(const Expr& other) const;
};

// Grammar, loosest first:
//   expr     := additive [("<" | "<=" | "==" | "><") additive]
//   additive := term {("+" | "-") term}
//   term     := unary {"*" unary}
//   unary    := "-" unary | atom
//   atom     := digits ["/" digits ["^" digits]] | "s:" {"+" | "-"}
//             | "{" [list] "|" [list] "}" | "(" expr ")" | name "(" expr ")"
//   list     := additive {"," additive}
// Throws SyntaxError.
Expr parse(std::string_view input);

// Minimal parentheses; parse(print(e)) == e.
std::string print(const Expr& e);

using Value = std::variant<NodeId, bool, Dyadic, BigInt, SignSeq>;

// Cut literals go through Arena::make and may throw CutViolation. Kind
// mismatches throw EvalError.
Value eval(Arena& arena, const Expr& e);

}  // namespace surreal
