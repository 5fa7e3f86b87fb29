#pragma once

/**
 * @file curve.hpp
 * @brief Legendre curves: a plane curve gamma with a unit normal field nu
 * satisfying gamma'(t) . nu(t) = 0, and their curvature pair (ell, beta).
 *
 * With mu = J nu (anticlockwise quarter turn) the frame obeys
 *   nu' = ell mu,  mu' = -ell nu,  gamma' = beta mu,
 * so ell = nu' . mu and beta = gamma' . mu. Singular points of gamma are
 * exactly the zeros of beta; inflection points are the zeros of ell.
 */

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legendre/expr.hpp"
#include "legendre/taylor.hpp"
#include "legendre/vec2.hpp"

namespace legendre {

// Taylor jets of the four frame components at one parameter value.
struct FrameJets {
  Jet x;
  Jet y;
  Jet nx;
  Jet ny;
};

using FrameFunction = std::function<FrameJets(double t0, int order)>;

// Text form of a curve, mirroring the JSON spec file.
struct CurveSpec {
  std::string x;
  std::string y;
  std::optional<std::array<std::string, 2>> nu;
  Interval domain;
  bool closed = false;
  std::map<std::string, double> params;
};

inline constexpr int kLegendreGrid = 2048;
inline constexpr double kLegendreTolerance = 1e-9;

class LegendreCurve {
 public:
  // Callers are responsible for the frame being unit and orthogonal to
  // gamma'; use check_legendre to verify. A closed curve must be C^1-closed.
  LegendreCurve(FrameFunction frame, Interval domain, bool closed);

  static LegendreCurve from_expressions(const Expr& x, const Expr& y, const Expr& nx, const Expr& ny,
                                        Interval domain, bool closed);
  // Parses the spec (after parameter substitution). Without nu, the frame is
  // derived from gamma', which requires a regular curve.
  static LegendreCurve from_spec(const CurveSpec& spec);

  FrameJets frame(double t0, int order) const { return frame_(t0, order); }
  Vec2 gamma(double t) const;
  Vec2 nu(double t) const;

  const Interval& domain() const noexcept { return domain_; }
  bool closed() const noexcept { return closed_; }

  // The spec this curve was built from, when it came from text.
  const std::optional<CurveSpec>& source() const noexcept { return source_; }

 private:
  FrameFunction frame_;
  Interval domain_;
  bool closed_;
  std::optional<CurveSpec> source_;
};

// mu = J(nu).
inline Vec2 moving_frame(Vec2 nu) { return rotate_quarter(nu); }

struct LegendreReport {
  bool ok = false;
  double max_defect = 0.0;       // max |gamma' . nu|
  double max_norm_defect = 0.0;  // max ||nu| - 1|
};

LegendreReport check_legendre(const LegendreCurve& curve, int samples = kLegendreGrid,
                              double tol = kLegendreTolerance);

struct CurvatureValue {
  double ell;
  double beta;
};

CurvatureValue curvature(const LegendreCurve& curve, double t);

// Jets of (ell, beta) at t0; needs the frame to one order more.
std::pair<Jet, Jet> curvature_jets(const LegendreCurve& curve, double t0, int order);

struct CurvaturePair {
  ScalarFunction ell;
  ScalarFunction beta;
};

CurvaturePair curvature_pair(const LegendreCurve& curve);
CurvaturePair curvature_pair(const Expr& ell, const Expr& beta);

// nu = J(gamma') / |gamma'|, so beta = -|gamma'| < 0. Throws on a grid point
// where |gamma'| < 1e-9.
std::pair<ScalarFunction, ScalarFunction> derive_nu(const Expr& x, const Expr& y, Interval domain);

struct ImmersionReport {
  bool ok = true;
  std::vector<double> witnesses;  // parameters where ell and beta both vanish
};

ImmersionReport is_immersion(const LegendreCurve& curve, int samples = 4096);

struct ClosedReport {
  // Largest n with matching endpoint derivatives of order 0..n; -1 when the
  // endpoints differ already in value.
  int closed_order = -1;
  // True when every checked order matched.
  bool to_checked_order = false;
};

ClosedReport check_closed(const LegendreCurve& curve, int max_order = 8, double tol = 1e-8);

}  // namespace legendre
