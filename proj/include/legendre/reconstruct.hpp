#pragma once

/**
 * @file reconstruct.hpp
 * @brief Rebuild a Legendre curve from its curvature pair and compare
 * sampled curves up to rigid motion.
 *
 * With theta = integral of ell, the frame is nu = (cos theta, sin theta) and
 * gamma = (-integral beta sin theta, integral beta cos theta). The integration
 * constants are fixed by theta(a) = 0 and gamma(a) = 0.
 */

#include <iosfwd>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/taylor.hpp"
#include "legendre/vec2.hpp"

namespace legendre {

struct SampledCurve {
  std::vector<double> ts;
  std::vector<Vec2> gammas;
  std::vector<Vec2> nus;
  double step = 0.0;
  // Max difference of gamma against a half-resolution run, or 0 when the
  // step count is odd and no comparison was made.
  double error_estimate = 0.0;

  std::size_t size() const noexcept { return ts.size(); }
};

struct Congruence {
  double rotation_angle = 0.0;
  Vec2 translation;

  Vec2 apply(Vec2 p) const { return rotate(p, rotation_angle) + translation; }
};

struct Alignment {
  Congruence congruence;
  double residual = 0.0;
};

// Cumulative Simpson quadrature on `steps` uniform intervals (steps >= 16).
SampledCurve reconstruct(const ScalarFunction& ell, const ScalarFunction& beta, Interval domain, int steps);

// Samples gamma and nu on the same uniform grid reconstruct would use.
SampledCurve sample_curve(const LegendreCurve& curve, int steps);

// Rotation fixed by the frames at the first grid point; the residual is the
// max over the grid of the gamma and nu mismatches. Throws "grid mismatch".
Alignment align_congruence(const SampledCurve& from, const SampledCurve& to);

struct SampledCurvature {
  std::vector<double> ell;
  std::vector<double> beta;
};

// Curvature of a sampled curve from fourth-order finite differences.
SampledCurvature sampled_curvature(const SampledCurve& curve);

// CSV with header t,gx,gy,nx,ny and 17 significant digits.
void write_curve_csv(std::ostream& out, const SampledCurve& curve);

}  // namespace legendre
