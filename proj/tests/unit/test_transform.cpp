#include <cmath>

#include "doctest.h"
#include "legendre/gallery.hpp"
#include "legendre/transform.hpp"

using namespace legendre;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 6.283185307179586;

Expr one(std::string_view text) { return parse_expr(text, Arity::one_var); }

void check_law(const Transformed& tr, std::initializer_list<double> ts) {
  for (double t : ts) {
    const CurvatureValue k = curvature(tr.curve, t);
    CHECK(k.ell == Approx(tr.law.ell.value(t)));
    CHECK(k.beta == Approx(tr.law.beta.value(t)));
  }
}

}  // namespace

TEST_CASE("reparametrization scales by t'") {
  const LegendreCurve circle = gallery("circle").curve;
  const Transformed fast = reparametrize(circle, one("2*t"), {0.0, kTwoPi / 2});
  const CurvatureValue k = curvature(fast.curve, 0.7);
  CHECK(k.ell == Approx(2.0));
  CHECK(k.beta == Approx(2.0));
  CHECK(fast.curve.closed());
  check_law(fast, {0.1, 1.0, 3.0});

  const Transformed back = reparametrize(circle, one("-t"), {-kTwoPi, 0.0});
  CHECK(curvature(back.curve, -1.0).ell == Approx(-1.0));
  CHECK(curvature(back.curve, -1.0).beta == Approx(-1.0));
}

TEST_CASE("reparametrization errors") {
  const LegendreCurve circle = gallery("circle").curve;
  CHECK_THROWS_WITH(reparametrize(circle, one("t^2"), {-1.0, 1.0}), doctest::Contains("not a parameter change"));
  CHECK_THROWS_WITH(reparametrize(circle, one("t + 10"), {0.0, 1.0}),
                    doctest::Contains("parameter change leaves the curve's domain"));
}

TEST_CASE("diagonal affine maps") {
  const LegendreCurve circle = gallery("circle").curve;
  const Transformed stretched = pushforward_affine(circle, {2.0, 0.0, 0.0, 1.0});
  const CurvatureValue k0 = curvature(stretched.curve, 0.0);
  CHECK(k0.ell == Approx(2.0));
  CHECK(k0.beta == Approx(1.0));
  check_law(stretched, {0.3, 1.7, 4.0});

  const Transformed mirrored = pushforward_affine(circle, {1.0, 0.0, 0.0, -1.0});
  const CurvatureValue k1 = curvature(mirrored.curve, 0.4);
  CHECK(k1.ell == Approx(-1.0));
  CHECK(k1.beta == Approx(1.0));

  CHECK_THROWS_WITH(pushforward_affine(circle, {1.0, 2.0, 2.0, 4.0}), "affine map must be invertible (det = 0)");
}

TEST_CASE("a general affine map agrees with the law") {
  const Transformed tr = pushforward_affine(gallery("gamma_n", {{"n", 5}}).curve, {1.5, -0.3, 0.7, 0.9});
  check_law(tr, {0.2, 1.1, 2.9, 5.5});
}

TEST_CASE("swapping coordinates") {
  const LegendreCurve circle = gallery("circle").curve;
  const Transformed once = pushforward_swap(circle);
  CHECK(curvature(once.curve, 1.0).ell == Approx(-1.0));
  CHECK(curvature(once.curve, 1.0).beta == Approx(1.0));
  const Transformed twice = pushforward_swap(once.curve);
  for (double t : {0.0, 2.0}) {
    CHECK(twice.curve.gamma(t).x == Approx(circle.gamma(t).x));
    CHECK(twice.curve.nu(t).y == Approx(circle.nu(t).y));
  }

  const LegendreCurve cusp = gallery("type_nm").curve;
  const Transformed swapped = pushforward_swap(cusp);
  check_law(swapped, {-0.5, 0.0, 0.8});
}

TEST_CASE("negation flips beta only") {
  const LegendreCurve curve = gallery("gamma_m").curve;
  for (Negation which : {Negation::nu, Negation::gamma}) {
    const Transformed tr = negate(curve, which);
    for (double t : {0.4, 2.0}) {
      const CurvatureValue before = curvature(curve, t);
      const CurvatureValue after = curvature(tr.curve, t);
      CHECK(after.ell == Approx(before.ell));
      CHECK(after.beta == Approx(-before.beta));
    }
  }
}

TEST_CASE("identity diffeomorphism changes nothing") {
  const LegendreCurve curve = gallery("gamma_ab").curve;
  const DiffeoSpec id = DiffeoSpec::parse("x;y");
  for (double t : {0.3, 1.9}) {
    const DiffeoPoint p = pushforward_diffeo(curve, id, t);
    const CurvatureValue k = curvature(curve, t);
    CHECK(p.ell == Approx(k.ell));
    CHECK(p.beta == Approx(k.beta));
  }
}

TEST_CASE("parabola under a shear-like diffeomorphism") {
  // (x, y) -> (x, y - x^2) sends the line (t, 0) with nu = (0, 1) to the
  // parabola (t, -t^2).
  CurveSpec s;
  s.x = "t";
  s.y = "0";
  s.nu = {{"0", "1"}};
  s.domain = {-1.0, 1.0};
  const LegendreCurve line = LegendreCurve::from_spec(s);
  const DiffeoSpec shear = DiffeoSpec::parse("x;y - x^2");
  const DiffeoPoint at0 = pushforward_diffeo(line, shear, 0.0);
  CHECK(at0.ell == Approx(-2.0));
  for (double t : {-0.5, 0.0, 0.7}) {
    CHECK(pushforward_diffeo(line, shear, t).beta == Approx(-std::sqrt(4 * t * t + 1)));
  }
  check_law(pushforward_diffeo(line, shear), {-0.5, 0.0, 0.7});

  // Bending the other way turns the frame the other way.
  const DiffeoPoint up = pushforward_diffeo(line, DiffeoSpec::parse("x;y + x^2"), 0.0);
  CHECK(up.ell == Approx(2.0));
  CHECK(up.beta == Approx(-1.0));
}

TEST_CASE("diffeomorphism degenerating on the curve") {
  const LegendreCurve circle = gallery("circle").curve;
  CHECK_THROWS_WITH(pushforward_diffeo(circle, DiffeoSpec::parse("x^2;y")),
                    doctest::Contains("diffeomorphism degenerates along the curve"));
  CHECK_THROWS_AS(DiffeoSpec::parse("x + y"), UsageError);
}
