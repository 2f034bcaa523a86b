#include "surreal/expr.hpp"

#include "surreal/arithmetic.hpp"
#include "surreal/errors.hpp"
#include "surreal/oracle.hpp"

#include <cctype>

namespace surreal {

bool Expr::operator==(const Expr& other) const {
  return kind == other.kind && text == other.text &&
         left_count == other.left_count && args == other.args;
}

namespace {

bool is_function(std::string_view name) {
  return name == "value" || name == "sign" || name == "birthday" ||
         name == "canon";
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (pos_ < in_.size()) fail("end of input");
    return e;
  }

 private:
  std::string_view in_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip();
    std::string found = pos_ < in_.size() ? std::string(1, in_[pos_]) : "";
    throw SyntaxError(pos_, expected, found);
  }

  bool accept(std::string_view token) {
    skip();
    if (in_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("'" + std::string(token) + "'");
  }

  static Expr node(ExprKind kind, std::size_t at, std::vector<Expr> args) {
    Expr e;
    e.kind = kind;
    e.position = at;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = additive();
    ExprKind kind;
    // Longer tokens first: "<=" before "<".
    if (accept("<=")) kind = ExprKind::Leq;
    else if (accept("<")) kind = ExprKind::Lt;
    else if (accept("==")) kind = ExprKind::Eq;
    else if (accept("><")) kind = ExprKind::Apart;
    else return lhs;
    Expr rhs = additive();
    return node(kind, lhs.position, {std::move(lhs), std::move(rhs)});
  }

  Expr additive() {
    Expr lhs = term();
    for (;;) {
      ExprKind kind;
      if (accept("+")) kind = ExprKind::Add;
      else if (accept("-")) kind = ExprKind::Sub;
      else return lhs;
      Expr rhs = term();
      std::size_t at = lhs.position;
      lhs = node(kind, at, {std::move(lhs), std::move(rhs)});
    }
  }

  Expr term() {
    Expr lhs = unary();
    while (accept("*")) {
      Expr rhs = unary();
      std::size_t at = lhs.position;
      lhs = node(ExprKind::Mul, at, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  Expr unary() {
    skip();
    std::size_t at = pos_;
    if (accept("-")) return node(ExprKind::Neg, at, {unary()});
    return atom();
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
      ++pos_;
    }
    return std::string(in_.substr(start, pos_ - start));
  }

  Expr number() {
    std::size_t at = pos_;
    std::string text = digits();
    if (pos_ >= in_.size() || in_[pos_] != '/') {
      Expr e = node(ExprKind::Integer, at, {});
      e.text = text;
      return e;
    }
    ++pos_;
    std::size_t den_at = pos_;
    std::string den = digits();
    if (den.empty()) fail("a denominator");
    if (pos_ < in_.size() && in_[pos_] == '^') {
      ++pos_;
      std::string k = digits();
      if (den != "2" || k.empty()) {
        pos_ = den_at;
        fail("a denominator of the form 2^k");
      }
      den += "^" + k;
    }
    Expr e = node(ExprKind::Dyadic, at, {});
    e.text = text + "/" + den;
    try {
      Dyadic::parse(e.text);
    } catch (const std::invalid_argument&) {
      std::size_t end = pos_;
      pos_ = den_at;
      throw SyntaxError(den_at,
                        "a power-of-two denominator (only dyadic rationals "
                        "are finitely born)",
                        std::string(in_.substr(den_at, end - den_at)));
    }
    return e;
  }

  Expr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= in_.size()) fail("an operand");
    char c = in_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (accept("s:")) {
      std::size_t start = pos_;
      while (pos_ < in_.size() && (in_[pos_] == '+' || in_[pos_] == '-')) ++pos_;
      Expr e = node(ExprKind::Signs, at, {});
      e.text = std::string(in_.substr(start, pos_ - start));
      return e;
    }
    if (accept("{")) {
      Expr e = node(ExprKind::Cut, at, {});
      if (!accept("|")) {
        list(e.args);
        expect("|");
      }
      e.left_count = e.args.size();
      if (!accept("}")) {
        list(e.args);
        expect("}");
      }
      return e;
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      e.position = at;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_]))) {
        ++pos_;
      }
      std::string name(in_.substr(start, pos_ - start));
      if (!is_function(name)) {
        pos_ = start;
        fail("one of value, sign, birthday, canon");
      }
      expect("(");
      Expr e = node(ExprKind::Call, at, {expr()});
      e.text = name;
      expect(")");
      return e;
    }
    fail("an operand");
  }

  void list(std::vector<Expr>& out) {
    out.push_back(additive());
    while (accept(",")) out.push_back(additive());
  }
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Lt:
    case ExprKind::Leq:
    case ExprKind::Eq:
    case ExprKind::Apart:
      return 1;
    case ExprKind::Add:
    case ExprKind::Sub:
      return 2;
    case ExprKind::Mul:
      return 3;
    case ExprKind::Neg:
      return 4;
    default:
      return 5;
  }
}

const char* symbol(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add: return " + ";
    case ExprKind::Sub: return " - ";
    case ExprKind::Mul: return " * ";
    case ExprKind::Lt: return " < ";
    case ExprKind::Leq: return " <= ";
    case ExprKind::Eq: return " == ";
    case ExprKind::Apart: return " >< ";
    default: return "";
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

NodeId as_node(const Value& v) {
  if (const NodeId* n = std::get_if<NodeId>(&v)) return *n;
  throw EvalError("expected a number operand");
}

}  // namespace

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Integer:
    case ExprKind::Dyadic:
      return e.text;
    case ExprKind::Signs:
      return "s:" + e.text;
    case ExprKind::Cut: {
      std::string out = "{";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i == e.left_count) out += "|";
        else if (i > 0) out += ", ";
        out += wrap(e.args[i], 2);
      }
      if (e.left_count == e.args.size()) out += "|";
      return out + "}";
    }
    case ExprKind::Neg:
      return "-" + wrap(e.args[0], 4);
    case ExprKind::Call:
      return e.text + "(" + print(e.args[0]) + ")";
    default: {
      int p = precedence(e);
      // Left-associative: the right operand must bind strictly tighter.
      return wrap(e.args[0], p == 1 ? 2 : p) + symbol(e.kind) +
             wrap(e.args[1], p + 1);
    }
  }
}

Value eval(Arena& arena, const Expr& e) {
  auto operand = [&arena](const Expr& sub) { return as_node(eval(arena, sub)); };
  switch (e.kind) {
    case ExprKind::Integer:
      return from_dyadic(arena, Dyadic(BigInt(e.text)));
    case ExprKind::Dyadic:
      return from_dyadic(arena, Dyadic::parse(e.text));
    case ExprKind::Signs:
      return decode(arena, SignSeq::parse(e.text));
    case ExprKind::Cut: {
      std::vector<NodeId> left, right;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        (i < e.left_count ? left : right).push_back(operand(e.args[i]));
      }
      return arena.make(left, right);
    }
    case ExprKind::Neg:
      return neg(arena, operand(e.args[0]));
    case ExprKind::Add:
      return add(arena, operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Sub:
      return sub(arena, operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Mul:
      return mul(arena, operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Lt:
      return arena.lt(operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Leq:
      return arena.leq(operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Eq:
      return arena.eq(operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Apart:
      return arena.apart(operand(e.args[0]), operand(e.args[1]));
    case ExprKind::Call: {
      NodeId x = operand(e.args[0]);
      if (e.text == "value") return value(arena, x);
      if (e.text == "sign") return encode(arena, x);
      if (e.text == "birthday") {
        return BigInt(arena.birthday(canonicalize(arena, x)));
      }
      return canonicalize(arena, x);
    }
  }
  throw EvalError("unknown expression kind");
}

}  // namespace surreal
