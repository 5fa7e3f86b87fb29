#pragma once

/**
 * @file expr.hpp
 * @brief A small expression language over t (curves) or x, y (plane maps).
 *
 * Grammar:
 *   expr   := term (("+" | "-") term)*
 *   term   := factor (("*" | "/") factor)*
 *   factor := "-" factor | base ("^" int)?
 *   base   := number | "t" | "x" | "y" | "pi" | fn "(" expr ")" | "(" expr ")"
 *   fn     := "sin" | "cos" | "exp" | "sqrt" | "atan"
 *
 * There is no implicit multiplication and exponents are non-negative integer
 * literals. Parsed trees are immutable and can be evaluated over doubles,
 * Taylor jets or bivariate jets.
 */

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "legendre/error.hpp"
#include "legendre/taylor.hpp"

namespace legendre {

enum class Arity { one_var, two_var };
enum class Var { t, x, y };
enum class UnaryOp { neg, sin, cos, exp, sqrt, atan };
enum class BinaryOp { add, sub, mul, div };

class ParseError : public UsageError {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct NumberNode {
  double value;
};
struct VarNode {
  Var var;
};
struct PiNode {};
struct UnaryNode {
  UnaryOp op;
  NodePtr child;
};
struct BinaryNode {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct PowIntNode {
  NodePtr base;
  int exponent;
};

struct Node {
  std::variant<NumberNode, VarNode, PiNode, UnaryNode, BinaryNode, PowIntNode> data;
};

// Structural equality; numbers compare bitwise-equal.
bool operator==(const Node& a, const Node& b);

NodePtr make_number(double value);
NodePtr make_var(Var var);
NodePtr make_pi();
NodePtr make_unary(UnaryOp op, NodePtr child);
NodePtr make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
NodePtr make_pow(NodePtr base, int exponent);

class Expr {
 public:
  Expr(NodePtr root, Arity arity);

  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }
  Arity arity() const noexcept { return arity_; }

  friend bool operator==(const Expr& a, const Expr& b) { return a.arity_ == b.arity_ && *a.root_ == *b.root_; }

 private:
  NodePtr root_;
  Arity arity_;
};

// Throws ParseError with the byte offset of the offending token.
Expr parse_expr(std::string_view text, Arity arity);

// Canonical fully parenthesized text; parse_expr(pretty_print(e)) == e.
std::string pretty_print(const Node& node);
inline std::string pretty_print(const Expr& e) { return pretty_print(e.root()); }

// Shortest text that reads back as exactly `value`.
std::string format_number(double value);

// Replace whole-identifier occurrences of each parameter name by its value.
// Non-negative integers are inserted as bare digits (so they can appear as
// exponents); other values are parenthesized.
std::string substitute_params(std::string_view text, const std::map<std::string, double>& params);

template <class T>
struct Bindings {
  T t;
  T x;
  T y;
};

template <class T>
T evaluate(const Node& node, const Bindings<T>& env) {
  using std::atan;
  using std::cos;
  using std::exp;
  using std::sin;
  using std::sqrt;
  struct Visitor {
    const Bindings<T>& env;

    T operator()(const NumberNode& n) const { return constant_like(n.value, env.t); }
    T operator()(const PiNode&) const { return constant_like(3.14159265358979323846, env.t); }
    T operator()(const VarNode& v) const {
      switch (v.var) {
        case Var::t: return env.t;
        case Var::x: return env.x;
        case Var::y: return env.y;
      }
      return env.t;
    }
    T operator()(const UnaryNode& u) const {
      T a = evaluate(*u.child, env);
      switch (u.op) {
        case UnaryOp::neg: return -a;
        case UnaryOp::sin: return sin(a);
        case UnaryOp::cos: return cos(a);
        case UnaryOp::exp: return exp(a);
        case UnaryOp::sqrt:
          detail::require_positive_sqrt(a);
          return sqrt(a);
        case UnaryOp::atan: return atan(a);
      }
      return a;
    }
    T operator()(const BinaryNode& b) const {
      T l = evaluate(*b.lhs, env);
      T r = evaluate(*b.rhs, env);
      switch (b.op) {
        case BinaryOp::add: return l + r;
        case BinaryOp::sub: return l - r;
        case BinaryOp::mul: return l * r;
        case BinaryOp::div:
          detail::require_nonzero_divisor(r);
          return l / r;
      }
      return l;
    }
    T operator()(const PowIntNode& p) const { return pow_int(evaluate(*p.base, env), p.exponent); }
  };
  return std::visit(Visitor{env}, node.data);
}

double eval(const Expr& e, double t);
Jet eval_jet(const Expr& e, double t0, int order);
BiJet2d eval_bijet(const Expr& e, double x0, double y0);

// Univariate expression as an expandable function of t.
ScalarFunction to_function(const Expr& e);

}  // namespace legendre
