#include <cmath>
#include <random>

#include "doctest.h"
#include "legendre/expr.hpp"
#include "oracles.hpp"

using namespace legendre;
using doctest::Approx;

namespace {

std::size_t error_offset(std::string_view text, Arity arity = Arity::one_var) {
  try {
    parse_expr(text, arity);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(eval(parse_expr("1 + 2 * 3", Arity::one_var), 0) == 7);
  CHECK(eval(parse_expr("8 / 4 / 2", Arity::one_var), 0) == 1);
  CHECK(eval(parse_expr("10 - 4 - 3", Arity::one_var), 0) == 3);
  CHECK(eval(parse_expr("2 * t^3", Arity::one_var), 2) == 16);
  // Unary minus binds looser than ^.
  CHECK(eval(parse_expr("-t^2", Arity::one_var), 3) == -9);
  CHECK(eval(parse_expr("(-t)^2", Arity::one_var), 3) == 9);
  CHECK(eval(parse_expr("2*-t", Arity::one_var), 3) == -6);
}

TEST_CASE("functions, constants and number formats") {
  CHECK(eval(parse_expr("sin(pi/2) + cos(0) + exp(0) + sqrt(4) + atan(0)", Arity::one_var), 0) == Approx(5.0));
  CHECK(eval(parse_expr("1.5e2 + .5", Arity::one_var), 0) == 150.5);
  CHECK(eval_bijet(parse_expr("x*y^2", Arity::two_var), 2.0, 3.0).value == 18.0);
}

TEST_CASE("variables are checked against the arity") {
  CHECK_THROWS_AS(parse_expr("x + 1", Arity::one_var), ParseError);
  CHECK_THROWS_AS(parse_expr("t + x", Arity::two_var), ParseError);
  CHECK(error_offset("1 + y", Arity::one_var) == 4);
}

TEST_CASE("malformed input reports the offending offset") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("   ") == 3);
  CHECK(error_offset("1 + * t") == 4);
  CHECK(error_offset("sin(t") == 5);
  CHECK(error_offset("(t + 1))") == 7);
  CHECK(error_offset("t^-1") == 2);
  CHECK(error_offset("t^1.5") == 2);
  CHECK(error_offset("t^x") == 2);
  CHECK(error_offset("foo(t)") == 0);
  CHECK(error_offset("2 t") == 2);
  CHECK(error_offset("t $ 1") == 2);
  CHECK_THROWS_WITH(parse_expr("1 + * t", Arity::one_var), doctest::Contains("syntax error at offset 4"));
}

TEST_CASE("parse errors are usage errors") {
  CHECK_THROWS_AS(parse_expr("(", Arity::one_var), UsageError);
}

TEST_CASE("evaluation errors are domain errors") {
  CHECK_THROWS_AS(eval(parse_expr("1/t", Arity::one_var), 0.0), Error);
  CHECK_THROWS_AS(eval(parse_expr("sqrt(t)", Arity::one_var), -1.0), Error);
}

TEST_CASE("pretty printing is canonical and parenthesized") {
  CHECK(pretty_print(parse_expr("1+2*t", Arity::one_var)) == "(1 + (2 * t))");
  CHECK(pretty_print(parse_expr("-t^2", Arity::one_var)) == "(-(t^2))");
  CHECK(pretty_print(parse_expr("sin(x)*y", Arity::two_var)) == "(sin(x) * y)");
  CHECK(pretty_print(parse_expr("pi", Arity::one_var)) == "pi");
}

TEST_CASE("random trees survive print and parse") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    const Arity arity = i % 3 == 0 ? Arity::two_var : Arity::one_var;
    const Expr e(oracle::random_ast(rng, arity, 6), arity);
    const std::string text = pretty_print(e);
    INFO(text);
    CHECK(parse_expr(text, arity) == e);
  }
}

TEST_CASE("numbers print at full precision") {
  for (double v : {0.1, 1.0 / 3.0, 6.283185307179586, 1e-300, 123456789.125}) {
    CHECK(parse_expr(format_number(v), Arity::one_var) == Expr(make_number(v), Arity::one_var));
  }
}

TEST_CASE("parameter substitution") {
  const std::map<std::string, double> p = {{"n", 3}, {"a", -0.5}, {"nn", 7}};
  CHECK(substitute_params("n*cos(t) - cos(n*t)", p) == "3*cos(t) - cos(3*t)");
  CHECK(substitute_params("t^n + nn + a", p) == "t^3 + 7 + (-0.5)");
  // Only whole identifiers are replaced, and exponent letters in numbers are kept.
  CHECK(substitute_params("sin(t) + 2e5", {{"e", 1}, {"in", 2}}) == "sin(t) + 2e5");
}

TEST_CASE("expressions as functions of t") {
  const ScalarFunction f = to_function(parse_expr("t^3", Arity::one_var));
  const Jet j = f(2.0, 3);
  CHECK(j[0] == 8);
  CHECK(j[1] == 12);
  CHECK(j[2] == 6);
  CHECK(j[3] == 1);
}
