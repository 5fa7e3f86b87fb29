#include "legendre/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <ostream>

namespace legendre {

namespace {

// Running integral of uniformly sampled f with F[0] = 0. Steps are taken in
// pairs; the first half of a pair uses the quadratic through its three nodes.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
  const std::size_t n = f.size() - 1;
  std::vector<double> F(n + 1, 0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    F[i + 1] = F[i] + h / 12.0 * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
    F[i + 2] = F[i] + h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  }
  if (i < n) F[n] = F[n - 1] + h / 12.0 * (-f[n - 2] + 8.0 * f[n - 1] + 5.0 * f[n]);
  return F;
}

SampledCurve integrate(const ScalarFunction& ell, const ScalarFunction& beta, Interval domain, int steps) {
  SampledCurve out;
  out.step = domain.length() / steps;
  std::vector<double> l(steps + 1);
  std::vector<double> b(steps + 1);
  out.ts.resize(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double t = domain.node(i, steps);
    out.ts[i] = t;
    try {
      l[i] = ell.value(t);
      b[i] = beta.value(t);
    } catch (const Error& e) {
      throw Error(fmt::format("curvature evaluation failed at t={:.17g}: {}", t, e.what()));
    }
  }
  const std::vector<double> theta = cumulative_simpson(l, out.step);
  std::vector<double> vx(steps + 1);
  std::vector<double> vy(steps + 1);
  out.nus.resize(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double c = std::cos(theta[i]);
    const double s = std::sin(theta[i]);
    out.nus[i] = {c, s};
    vx[i] = -b[i] * s;
    vy[i] = b[i] * c;
  }
  const std::vector<double> gx = cumulative_simpson(vx, out.step);
  const std::vector<double> gy = cumulative_simpson(vy, out.step);
  out.gammas.resize(steps + 1);
  for (int i = 0; i <= steps; ++i) out.gammas[i] = {gx[i], gy[i]};
  return out;
}

// Five-point derivative stencils; one-sided near the ends.
std::vector<Vec2> differentiate(const std::vector<Vec2>& p, double h) {
  const std::size_t n = p.size();
  if (n < 5) throw Error("finite differences need at least 5 samples");
  std::vector<Vec2> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, 5> w;
    std::size_t start;
    if (i >= 2 && i + 2 < n) {
      w = {1.0, -8.0, 0.0, 8.0, -1.0};
      start = i - 2;
    } else if (i < 2) {
      w = i == 0 ? std::array{-25.0, 48.0, -36.0, 16.0, -3.0} : std::array{-3.0, -10.0, 18.0, -6.0, 1.0};
      start = 0;
    } else {
      w = i == n - 1 ? std::array{3.0, -16.0, 36.0, -48.0, 25.0} : std::array{-1.0, 6.0, -18.0, 10.0, 3.0};
      start = n - 5;
    }
    Vec2 acc;
    for (std::size_t j = 0; j < 5; ++j) acc = acc + w[j] * p[start + j];
    d[i] = (1.0 / (12.0 * h)) * acc;
  }
  return d;
}

}  // namespace

SampledCurve reconstruct(const ScalarFunction& ell, const ScalarFunction& beta, Interval domain, int steps) {
  if (steps < 16) throw Error("reconstruct needs at least 16 steps");
  if (!(domain.hi > domain.lo)) throw Error("domain must satisfy a < b");
  SampledCurve out = integrate(ell, beta, domain, steps);
  if (steps % 2 == 0) {
    const SampledCurve coarse = integrate(ell, beta, domain, steps / 2);
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      out.error_estimate = std::max(out.error_estimate, norm(out.gammas[2 * i] - coarse.gammas[i]));
    }
  }
  return out;
}

SampledCurve sample_curve(const LegendreCurve& curve, int steps) {
  if (steps < 1) throw Error("sampling needs at least one step");
  SampledCurve out;
  out.step = curve.domain().length() / steps;
  for (int i = 0; i <= steps; ++i) {
    const double t = curve.domain().node(i, steps);
    const FrameJets f = curve.frame(t, 0);
    out.ts.push_back(t);
    out.gammas.push_back({f.x.value(), f.y.value()});
    out.nus.push_back({f.nx.value(), f.ny.value()});
  }
  return out;
}

Alignment align_congruence(const SampledCurve& from, const SampledCurve& to) {
  if (from.size() != to.size() || from.size() == 0) throw Error("grid mismatch");
  const Vec2 n1 = from.nus.front();
  const Vec2 n2 = to.nus.front();
  Alignment a;
  a.congruence.rotation_angle = std::atan2(n1.x * n2.y - n1.y * n2.x, dot(n1, n2));
  a.congruence.translation = to.gammas.front() - rotate(from.gammas.front(), a.congruence.rotation_angle);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const double dg = norm(to.gammas[i] - a.congruence.apply(from.gammas[i]));
    const double dn = norm(to.nus[i] - rotate(from.nus[i], a.congruence.rotation_angle));
    a.residual = std::max({a.residual, dg, dn});
  }
  return a;
}

SampledCurvature sampled_curvature(const SampledCurve& curve) {
  const std::vector<Vec2> dnu = differentiate(curve.nus, curve.step);
  const std::vector<Vec2> dgamma = differentiate(curve.gammas, curve.step);
  SampledCurvature out;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Vec2 mu = moving_frame(curve.nus[i]);
    out.ell.push_back(dot(dnu[i], mu));
    out.beta.push_back(dot(dgamma[i], mu));
  }
  return out;
}

void write_curve_csv(std::ostream& out, const SampledCurve& curve) {
  out << "t,gx,gy,nx,ny\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", curve.ts[i], curve.gammas[i].x, curve.gammas[i].y,
               curve.nus[i].x, curve.nus[i].y);
  }
}

}  // namespace legendre
