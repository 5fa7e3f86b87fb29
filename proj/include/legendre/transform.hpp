#pragma once

/**
 * @file transform.hpp
 * @brief How the curvature pair changes under parameter changes, maps of the
 * target plane and sign flips of the frame.
 *
 * Each operation returns the transformed curve together with the curvature
 * predicted by the transformation law. The law is evaluated from the original
 * curvature, so comparing it with the curvature recomputed from the new frame
 * checks both.
 */

#include <string_view>

#include "legendre/curve.hpp"
#include "legendre/expr.hpp"
#include "legendre/vec2.hpp"

namespace legendre {

struct Transformed {
  LegendreCurve curve;
  CurvaturePair law;
};

// u -> t(u) on new_domain; the law is ((ell o t) t', (beta o t) t').
// Throws "not a parameter change" if t' vanishes or changes sign on the grid.
Transformed reparametrize(const LegendreCurve& curve, const Expr& t_of_u, Interval new_domain);

struct AffineMap {
  double a11 = 1.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 1.0;

  double det() const { return a11 * a22 - a12 * a21; }
  Vec2 apply(Vec2 p) const { return {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y}; }
};

// gamma -> A gamma, nu -> nubar / |nubar| with nubar = (a22 a - a21 b, -a12 a + a11 b)
// for nu = (a, b). Law: (det ell / |nubar|^2, |nubar| beta).
Transformed pushforward_affine(const LegendreCurve& curve, const AffineMap& map);

// (x, y) -> (y, x) with nu -> (-b, -a). Law: (-ell, beta).
Transformed pushforward_swap(const LegendreCurve& curve);

enum class Negation { nu, gamma };

// (gamma, -nu) or (-gamma, nu); both have curvature (ell, -beta).
Transformed negate(const LegendreCurve& curve, Negation which);

struct DiffeoSpec {
  Expr phi1;
  Expr phi2;

  // "P1;P2" with P1, P2 expressions in x and y.
  static DiffeoSpec parse(std::string_view text);
};

struct DiffeoPoint {
  double ell;
  double beta;
  Vec2 nu;
};

// The second-order law for a general map of the plane, evaluated at one
// parameter. Throws "diffeomorphism degenerates along the curve" where the
// Jacobian of the map is singular.
DiffeoPoint pushforward_diffeo(const LegendreCurve& curve, const DiffeoSpec& diffeo, double t);

// The mapped curve with the law as an expandable function. The Jacobian is
// checked on a uniform grid along the curve.
Transformed pushforward_diffeo(const LegendreCurve& curve, const DiffeoSpec& diffeo);

}  // namespace legendre
