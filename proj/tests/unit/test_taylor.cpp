#include <cmath>

#include "doctest.h"
#include "legendre/expr.hpp"
#include "legendre/taylor.hpp"
#include "oracles.hpp"

using namespace legendre;
using doctest::Approx;

namespace {

// c[i] = f^(i)(t0)/i! for sin at t0.
double sin_coeff(double t0, int i) {
  const double d = (i % 4 == 0) ? std::sin(t0) : (i % 4 == 1) ? std::cos(t0) : (i % 4 == 2) ? -std::sin(t0) : -std::cos(t0);
  return d / std::tgamma(i + 1.0);
}

}  // namespace

TEST_CASE("variable and constant jets") {
  const Jet t = Jet::variable(2.0, 4);
  CHECK(t.order() == 4);
  CHECK(t[0] == 2.0);
  CHECK(t[1] == 1.0);
  CHECK(t[2] == 0.0);
  const Jet c = Jet::constant(3.5, 4);
  CHECK(c[0] == 3.5);
  CHECK(c[1] == 0.0);
}

TEST_CASE("products and powers follow the binomial expansion") {
  // (t0 + s)^5 around t0 = 2: c[i] = C(5, i) 2^(5-i)
  const Jet p = pow_int(Jet::variable(2.0, 6), 5);
  const double expected[] = {32, 80, 80, 40, 10, 1, 0};
  for (int i = 0; i <= 6; ++i) CHECK(p[i] == Approx(expected[i]));
  const Jet q = Jet::variable(2.0, 6) * Jet::variable(2.0, 6) * Jet::variable(2.0, 6);
  CHECK(q[1] == Approx(12.0));
  CHECK(pow_int(Jet::variable(1.5, 3), 0)[0] == 1.0);
}

TEST_CASE("elementary functions match their Taylor coefficients") {
  const double t0 = 0.7;
  const Jet s = sin(Jet::variable(t0, 10));
  for (int i = 0; i <= 10; ++i) CHECK(s[i] == Approx(sin_coeff(t0, i)).epsilon(1e-13));

  const Jet e = exp(Jet::variable(t0, 8));
  for (int i = 0; i <= 8; ++i) CHECK(e[i] == Approx(std::exp(t0) / std::tgamma(i + 1.0)).epsilon(1e-13));

  // sqrt(1 + s) = 1 + s/2 - s^2/8 + s^3/16
  const Jet r = sqrt(Jet::variable(1.0, 3));
  CHECK(r[1] == Approx(0.5));
  CHECK(r[2] == Approx(-0.125));
  CHECK(r[3] == Approx(0.0625));

  // atan'(t) = 1/(1+t^2); atan''(t) = -2t/(1+t^2)^2
  const Jet a = atan(Jet::variable(1.0, 2));
  CHECK(a[0] == Approx(std::atan(1.0)));
  CHECK(a[1] == Approx(0.5));
  CHECK(a[2] == Approx(-0.25));
}

TEST_CASE("division inverts multiplication") {
  const Jet t = Jet::variable(0.3, 8);
  const Jet f = sin(t) + 2.0;
  const Jet g = exp(t);
  const Jet back = (f * g) / g;
  for (int i = 0; i <= 8; ++i) CHECK(back[i] == Approx(f[i]).epsilon(1e-12));
  CHECK_THROWS_WITH(Jet::constant(1.0, 3) / Jet::variable(0.0, 3), "jet division by zero at expansion point");
  CHECK_THROWS_WITH(sqrt(Jet::variable(0.0, 3)), "sqrt domain error");
}

TEST_CASE("derivative, differentiation and integration") {
  const Jet s = sin(Jet::variable(0.0, 6));
  CHECK(s.derivative(3) == Approx(-1.0));
  CHECK_THROWS_WITH(s.derivative(7), "jet order exceeded");
  const Jet ds = s.differentiated();
  CHECK(ds.order() == 5);
  CHECK(ds[0] == Approx(1.0));
  const Jet back = ds.integrated(0.0);
  for (int i = 0; i <= 6; ++i) CHECK(back[i] == Approx(s[i]));
}

TEST_CASE("composition agrees with direct evaluation") {
  // sin(t^2) at t0 = 0.4 built two ways.
  const double t0 = 0.4;
  const Jet inner = pow_int(Jet::variable(t0, 9), 2);
  const Jet outer = sin(Jet::variable(inner.value(), 9));
  const Jet composed = compose(outer, inner);
  const Jet direct = sin(pow_int(Jet::variable(t0, 9), 2));
  for (int i = 0; i <= 9; ++i) CHECK(composed[i] == Approx(direct[i]).epsilon(1e-12));
}

TEST_CASE("mixed orders truncate to the smaller") {
  const Jet a = Jet::variable(1.0, 5);
  const Jet b = Jet::variable(1.0, 3);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
}

TEST_CASE("vanishing threshold and leading index") {
  Jet j(4);
  j[0] = 1e-18;
  j[1] = 0.0;
  j[2] = 3.0;
  j[3] = 1.0;
  CHECK(coefficient_vanishes(j, 0));
  CHECK(coefficient_vanishes(j, 1));
  CHECK_FALSE(coefficient_vanishes(j, 2));
  CHECK(leading_index(j) == 2);
  CHECK_FALSE(leading_index(Jet::constant(0.0, 4)).has_value());
}

TEST_CASE("a scale keeps small-radius series from hiding their low coefficients") {
  // s / (1 + (s/r)^2) with r = 1e-2: c1 = 1, c3 = -1e4, c5 = 1e8, ...
  const double r = 1e-2;
  Jet j(11);
  for (int k = 0; 2 * k + 1 <= 11; ++k) j[2 * k + 1] = (k % 2 == 0 ? 1.0 : -1.0) * std::pow(r, -2.0 * k);
  CHECK(leading_index(j) != 1);  // the unscaled test is fooled
  CHECK(leading_index(j, {.scale = 0.5 * r}) == 1);
}

TEST_CASE("jet first derivatives agree with central differences") {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    const Expr e(oracle::random_ast(rng, Arity::one_var, 4), Arity::one_var);
    const double t0 = 0.37;
    double value;
    double slope;
    try {
      const Jet j = eval_jet(e, t0, 1);
      value = j[0];
      slope = j[1];
      // Skip expressions that overflow or sit near a singularity of sqrt or /.
      for (double h : {1e-4, -1e-4}) (void)eval(e, t0 + h);
    } catch (const Error&) {
      continue;
    }
    if (!std::isfinite(value) || !std::isfinite(slope) || std::abs(slope) > 1e6) continue;
    const auto f = [&](double t) { return eval(e, t); };
    const double fd = oracle::central_difference(f, t0, 1e-6);
    // Fast oscillation: the difference quotient itself has not settled.
    const double coarse = oracle::central_difference(f, t0, 1e-5);
    if (!std::isfinite(fd) || std::abs(fd - coarse) > 1e-6 * std::max(1.0, std::abs(fd))) continue;
    INFO(pretty_print(e));
    CHECK(std::abs(slope - fd) <= 1e-5 * std::max(1.0, std::abs(slope)));
    ++compared;
  }
  CHECK(compared >= 100);
}

TEST_CASE("bivariate jets carry gradient and Hessian") {
  // f = x^2 y + sin(x y) at (0.5, 2)
  const BiJet2d x = BiJet2d::variable_x(0.5);
  const BiJet2d y = BiJet2d::variable_y(2.0);
  const BiJet2d f = pow_int(x, 2) * y + sin(x * y);
  const double c = std::cos(1.0);
  const double s = std::sin(1.0);
  CHECK(f.value == Approx(0.5 + s));
  CHECK(f.grad[0] == Approx(2 * 0.5 * 2.0 + 2.0 * c));
  CHECK(f.grad[1] == Approx(0.25 + 0.5 * c));
  CHECK(f.hess[0] == Approx(2 * 2.0 - 4.0 * s));
  CHECK(f.hess[1] == Approx(2 * 0.5 + c - 1.0 * s));
  CHECK(f.hess[2] == Approx(-0.25 * s));
}

TEST_CASE("bivariate jets over univariate jets") {
  // g(x, y) = x y along x = t, y = t^2 gives t^3.
  const Jet t = Jet::variable(1.5, 4);
  const BiJet2<Jet> x = BiJet2<Jet>::variable_x(t);
  const BiJet2<Jet> y = BiJet2<Jet>::variable_y(pow_int(t, 2));
  const BiJet2<Jet> g = x * y;
  const Jet cube = pow_int(t, 3);
  for (int i = 0; i <= 4; ++i) CHECK(g.value[i] == Approx(cube[i]));
  CHECK(g.grad[0][0] == Approx(2.25));  // d/dx = y
  CHECK(g.hess[1][0] == Approx(1.0));   // d2/dxdy = 1
}
