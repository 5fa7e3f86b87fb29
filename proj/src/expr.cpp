#include "legendre/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace legendre {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : UsageError("syntax error at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

NodePtr make_number(double value) { return std::make_shared<const Node>(Node{NumberNode{value}}); }
NodePtr make_var(Var var) { return std::make_shared<const Node>(Node{VarNode{var}}); }
NodePtr make_pi() { return std::make_shared<const Node>(Node{PiNode{}}); }
NodePtr make_unary(UnaryOp op, NodePtr child) {
  return std::make_shared<const Node>(Node{UnaryNode{op, std::move(child)}});
}
NodePtr make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
  return std::make_shared<const Node>(Node{BinaryNode{op, std::move(lhs), std::move(rhs)}});
}
NodePtr make_pow(NodePtr base, int exponent) {
  if (exponent < 0) throw Error("exponent must be a non-negative integer");
  return std::make_shared<const Node>(Node{PowIntNode{std::move(base), exponent}});
}

bool operator==(const Node& a, const Node& b) {
  if (a.data.index() != b.data.index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.data);
        if constexpr (std::is_same_v<T, NumberNode>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, VarNode>) {
          return lhs.var == rhs.var;
        } else if constexpr (std::is_same_v<T, PiNode>) {
          return true;
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          return lhs.op == rhs.op && *lhs.child == *rhs.child;
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return lhs.op == rhs.op && *lhs.lhs == *rhs.lhs && *lhs.rhs == *rhs.rhs;
        } else {
          return lhs.exponent == rhs.exponent && *lhs.base == *rhs.base;
        }
      },
      a.data);
}

Expr::Expr(NodePtr root, Arity arity) : root_(std::move(root)), arity_(arity) {
  if (!root_) throw Error("expression has no root node");
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
 public:
  Parser(std::string_view text, Arity arity) : text_(text), arity_(arity) {}

  NodePtr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ == text_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
    }
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = make_binary(BinaryOp::add, lhs, term());
      } else if (accept('-')) {
        lhs = make_binary(BinaryOp::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = make_binary(BinaryOp::mul, lhs, factor());
      } else if (accept('/')) {
        lhs = make_binary(BinaryOp::div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    if (accept('-')) return make_unary(UnaryOp::neg, factor());
    NodePtr b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      const bool fractional = pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E');
      if (start == pos_ || fractional) throw ParseError("exponent must be a non-negative integer literal", start);
      int exponent = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
      if (ec != std::errc{}) throw ParseError("exponent out of range", start);
      b = make_pow(b, exponent);
    }
    return b;
  }

  NodePtr base() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (is_digit(c) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (is_ident_start(c)) return identifier();
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    // Exponent part only when followed by digits, so "2e" is not swallowed.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && is_digit(text_[p])) {
        pos_ = p;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_ || !std::isfinite(value)) {
      throw ParseError("malformed number", start);
    }
    return make_number(value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    if (name == "t" || name == "x" || name == "y") {
      const Var v = name == "t" ? Var::t : (name == "x" ? Var::x : Var::y);
      const bool ok = arity_ == Arity::one_var ? v == Var::t : v != Var::t;
      if (!ok) {
        throw ParseError("variable '" + std::string(name) + "' not allowed in a " +
                             (arity_ == Arity::one_var ? "one-variable" : "two-variable") + " expression",
                         start);
      }
      return make_var(v);
    }
    if (name == "pi") return make_pi();

    UnaryOp op;
    if (name == "sin") {
      op = UnaryOp::sin;
    } else if (name == "cos") {
      op = UnaryOp::cos;
    } else if (name == "exp") {
      op = UnaryOp::exp;
    } else if (name == "sqrt") {
      op = UnaryOp::sqrt;
    } else if (name == "atan") {
      op = UnaryOp::atan;
    } else {
      throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    }
    expect('(');
    NodePtr arg = expr();
    expect(')');
    return make_unary(op, arg);
  }

  std::string_view text_;
  Arity arity_;
  std::size_t pos_ = 0;
};

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::neg: return "-";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::exp: return "exp";
    case UnaryOp::sqrt: return "sqrt";
    case UnaryOp::atan: return "atan";
  }
  return "?";
}

const char* binary_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return " + ";
    case BinaryOp::sub: return " - ";
    case BinaryOp::mul: return " * ";
    case BinaryOp::div: return " / ";
  }
  return " ? ";
}

}  // namespace

Expr parse_expr(std::string_view text, Arity arity) { return Expr(Parser(text, arity).parse(), arity); }

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string pretty_print(const Node& node) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NumberNode>) {
          return n.value < 0 || std::signbit(n.value) ? "(" + format_number(n.value) + ")" : format_number(n.value);
        } else if constexpr (std::is_same_v<T, VarNode>) {
          return n.var == Var::t ? "t" : (n.var == Var::x ? "x" : "y");
        } else if constexpr (std::is_same_v<T, PiNode>) {
          return "pi";
        } else if constexpr (std::is_same_v<T, UnaryNode>) {
          if (n.op == UnaryOp::neg) return "(-" + pretty_print(*n.child) + ")";
          return std::string(unary_name(n.op)) + "(" + pretty_print(*n.child) + ")";
        } else if constexpr (std::is_same_v<T, BinaryNode>) {
          return "(" + pretty_print(*n.lhs) + binary_symbol(n.op) + pretty_print(*n.rhs) + ")";
        } else {
          return "(" + pretty_print(*n.base) + "^" + std::to_string(n.exponent) + ")";
        }
      },
      node.data);
}

std::string substitute_params(std::string_view text, const std::map<std::string, double>& params) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_digit(c) || c == '.') {
      // Copy numeric literals whole so "2e5" keeps its exponent letter.
      std::size_t j = i;
      while (j < text.size() && (is_digit(text[j]) || text[j] == '.')) ++j;
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t p = j + 1;
        if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
        if (p < text.size() && is_digit(text[p])) {
          j = p;
          while (j < text.size() && is_digit(text[j])) ++j;
        }
      }
      out.append(text.substr(i, j - i));
      i = j;
    } else if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      const std::string name(text.substr(i, j - i));
      if (auto it = params.find(name); it != params.end()) {
        const double v = it->second;
        if (v >= 0 && v == std::floor(v) && v < 1e15) {
          out += format_number(v);
        } else {
          out += "(" + format_number(v) + ")";
        }
      } else {
        out += name;
      }
      i = j;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

double eval(const Expr& e, double t) { return evaluate<double>(e.root(), {t, 0.0, 0.0}); }

Jet eval_jet(const Expr& e, double t0, int order) {
  Jet var = Jet::variable(t0, order);
  return evaluate<Jet>(e.root(), {var, var, var});
}

BiJet2d eval_bijet(const Expr& e, double x0, double y0) {
  Bindings<BiJet2d> env{BiJet2d::constant(0.0), BiJet2d::variable_x(x0), BiJet2d::variable_y(y0)};
  return evaluate<BiJet2d>(e.root(), env);
}

ScalarFunction to_function(const Expr& e) {
  if (e.arity() != Arity::one_var) throw Error("expected a one-variable expression");
  return ScalarFunction([e](double t0, int order) { return eval_jet(e, t0, order); });
}

}  // namespace legendre
