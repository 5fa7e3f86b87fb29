#include "doctest.h"
#include "legendre/normalform.hpp"
#include "legendre/transform.hpp"

using namespace legendre;

namespace {

Expr one(std::string_view text) { return parse_expr(text, Arity::one_var); }

GermData germ(GermCase kind, int n, int m, int p = 1) {
  GermData g;
  g.kind = kind;
  g.n = n;
  g.m = m;
  g.p = p;
  return g;
}

}  // namespace

TEST_CASE("case names") {
  CHECK(parse_germ_case("1") == GermCase::below_diagonal);
  CHECK(parse_germ_case("2i") == GermCase::diagonal_plain);
  CHECK(parse_germ_case("2ii") == GermCase::diagonal_perturbed);
  CHECK(parse_germ_case("above-diagonal") == GermCase::above_diagonal);
  CHECK(parse_germ_case(to_string(GermCase::diagonal_perturbed)) == GermCase::diagonal_perturbed);
  CHECK_THROWS_AS(parse_germ_case("4"), UsageError);
}

TEST_CASE("type (n, m) germs satisfy the Legendre condition") {
  for (auto [n, m] : {std::pair{1, 2}, {2, 3}, {2, 5}, {3, 4}, {3, 7}}) {
    for (int sign : {1, -1}) {
      const LegendreCurve c = type_nm_curve(n, m, one("1 + t"), sign);
      CHECK(check_legendre(c).ok);
      CHECK_FALSE(c.closed());
    }
  }
}

TEST_CASE("contact orders of type (n, m) germs at 0") {
  // beta vanishes to order n - 1 and ell to order m - n - 1.
  CHECK(local_signature(type_nm_curve(2, 3, one("1")), 0.0) == LocalSignature{false, 0, 1});
  CHECK(local_signature(type_nm_curve(2, 5, one("1")), 0.0) == LocalSignature{false, 2, 1});
  CHECK(local_signature(type_nm_curve(3, 4, one("2 - t")), 0.0) == LocalSignature{false, 0, 2});
  CHECK(local_signature(type_nm_curve(1, 4, one("exp(t)"), -1), 0.0) == LocalSignature{false, 2, 0});
}

TEST_CASE("type (n, m) errors") {
  CHECK_THROWS_WITH(type_nm_curve(2, 3, one("t")), "f must not vanish at 0");
  CHECK_THROWS_AS(type_nm_curve(3, 3, one("1")), Error);
  CHECK_THROWS_AS(type_nm_curve(2, 3, one("1"), 0), Error);
}

TEST_CASE("representatives carry the expected local data") {
  CHECK(germ_signature(germ(GermCase::below_diagonal, 2, 5)) == LocalSignature{false, 2, 1});
  const LocalSignature plain = germ_signature(germ(GermCase::diagonal_plain, 3, 3));
  CHECK(plain.ell_zero_function);
  CHECK(plain.ord_beta == 2);
  CHECK(germ_signature(germ(GermCase::diagonal_perturbed, 3, 3, 2)) == LocalSignature{false, 1, 2});
  // Swapping the coordinates of (t^2, t^5) gives (t^5, t^2).
  const LocalSignature above = germ_signature(germ(GermCase::above_diagonal, 5, 2));
  CHECK(above == local_signature(pushforward_swap(type_nm_curve(2, 5, one("1"))).curve, 0.0));
}

TEST_CASE("representative specs use integer exponents") {
  const CurveSpec s = normal_form_spec(germ(GermCase::below_diagonal, 2, 5));
  CHECK(s.x.find("t^2") != std::string::npos);
  CHECK(s.y.find("t^5") != std::string::npos);
  CHECK(s.domain.lo == -1.0);
  CHECK(s.domain.hi == 1.0);
  REQUIRE(s.nu.has_value());
  CHECK(check_legendre(local_normal_form(germ(GermCase::diagonal_plain, 2, 2))).ok);
  CHECK(check_legendre(local_normal_form(germ(GermCase::above_diagonal, 4, 3))).ok);
}

TEST_CASE("germ validation") {
  CHECK_THROWS_WITH(validate(germ(GermCase::below_diagonal, 3, 2)), "below-diagonal germ requires n < m");
  CHECK_THROWS_WITH(validate(germ(GermCase::diagonal_plain, 3, 2)), "diagonal germ requires n = m");
  CHECK_THROWS_WITH(validate(germ(GermCase::above_diagonal, 2, 3)), "above-diagonal germ requires n > m");
  CHECK_THROWS_WITH(validate(germ(GermCase::diagonal_perturbed, 2, 2, 0)), "diagonal-perturbed germ requires p >= 1");
}
