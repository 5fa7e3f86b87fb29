#include "legendre/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "legendre/signature.hpp"

namespace legendre {

namespace {

bool endpoints_match(const FrameFunction& frame, Interval domain, int order, double tol) {
  const FrameJets a = frame(domain.lo, order);
  const FrameJets b = frame(domain.hi, order);
  for (int k = 0; k <= order; ++k) {
    for (auto [ja, jb] : {std::pair{&a.x, &b.x}, {&a.y, &b.y}, {&a.nx, &b.nx}, {&a.ny, &b.ny}}) {
      const double da = ja->derivative(k);
      const double db = jb->derivative(k);
      if (std::abs(da - db) > tol * std::max({1.0, std::abs(da), std::abs(db)})) return false;
    }
  }
  return true;
}

FrameFunction expression_frame(const Expr& x, const Expr& y, const Expr& nx, const Expr& ny) {
  return [x, y, nx, ny](double t0, int order) {
    const Jet t = Jet::variable(t0, order);
    const Bindings<Jet> env{t, t, t};
    return FrameJets{evaluate(x.root(), env), evaluate(y.root(), env), evaluate(nx.root(), env),
                     evaluate(ny.root(), env)};
  };
}

// nu = J(gamma') / |gamma'| expanded from the jets of gamma at one order more.
std::array<Jet, 2> derived_normal(const Jet& x, const Jet& y) {
  const Jet dx = x.differentiated();
  const Jet dy = y.differentiated();
  const Jet speed = sqrt(dx * dx + dy * dy);
  return {-dy / speed, dx / speed};
}

void require_regular(const Expr& x, const Expr& y, Interval domain) {
  for (int i = 0; i <= kLegendreGrid; ++i) {
    const double t = domain.node(i, kLegendreGrid);
    const double dx = eval_jet(x, t, 1)[1];
    const double dy = eval_jet(y, t, 1)[1];
    if (std::hypot(dx, dy) < 1e-9) {
      throw Error(fmt::format("curve has a singular point; supply nu explicitly (|gamma'| vanishes near t={:.17g})", t));
    }
  }
}

}  // namespace

LegendreCurve::LegendreCurve(FrameFunction frame, Interval domain, bool closed)
    : frame_(std::move(frame)), domain_(domain), closed_(closed) {
  if (!(domain_.hi > domain_.lo)) throw Error("curve domain must satisfy a < b");
  if (closed_ && !endpoints_match(frame_, domain_, 1, kLegendreTolerance)) {
    throw Error("curve is flagged closed but is not C^1-closed");
  }
}

LegendreCurve LegendreCurve::from_expressions(const Expr& x, const Expr& y, const Expr& nx, const Expr& ny,
                                              Interval domain, bool closed) {
  for (const Expr* e : {&x, &y, &nx, &ny}) {
    if (e->arity() != Arity::one_var) throw Error("curve components must be expressions in t");
  }
  return LegendreCurve(expression_frame(x, y, nx, ny), domain, closed);
}

LegendreCurve LegendreCurve::from_spec(const CurveSpec& spec) {
  const Expr x = parse_expr(substitute_params(spec.x, spec.params), Arity::one_var);
  const Expr y = parse_expr(substitute_params(spec.y, spec.params), Arity::one_var);
  if (spec.nu) {
    const Expr nx = parse_expr(substitute_params((*spec.nu)[0], spec.params), Arity::one_var);
    const Expr ny = parse_expr(substitute_params((*spec.nu)[1], spec.params), Arity::one_var);
    LegendreCurve curve = from_expressions(x, y, nx, ny, spec.domain, spec.closed);
    curve.source_ = spec;
    return curve;
  }
  require_regular(x, y, spec.domain);
  FrameFunction frame = [x, y](double t0, int order) {
    const Jet gx = eval_jet(x, t0, order + 1);
    const Jet gy = eval_jet(y, t0, order + 1);
    auto [nx, ny] = derived_normal(gx, gy);
    return FrameJets{gx.truncated(order), gy.truncated(order), nx, ny};
  };
  LegendreCurve curve(std::move(frame), spec.domain, spec.closed);
  curve.source_ = spec;
  return curve;
}

Vec2 LegendreCurve::gamma(double t) const {
  const FrameJets f = frame_(t, 0);
  return {f.x.value(), f.y.value()};
}

Vec2 LegendreCurve::nu(double t) const {
  const FrameJets f = frame_(t, 0);
  return {f.nx.value(), f.ny.value()};
}

LegendreReport check_legendre(const LegendreCurve& curve, int samples, double tol) {
  if (samples < 2) throw Error("check_legendre needs at least 2 samples");
  LegendreReport report;
  for (int i = 0; i < samples; ++i) {
    const double t = curve.domain().node(i, samples - 1);
    FrameJets f;
    try {
      f = curve.frame(t, 1);
    } catch (const Error& e) {
      throw Error(fmt::format("evaluation failed at t={:.17g}: {}", t, e.what()));
    }
    const double defect = std::abs(f.x[1] * f.nx[0] + f.y[1] * f.ny[0]);
    const double norm_defect = std::abs(std::hypot(f.nx[0], f.ny[0]) - 1.0);
    report.max_defect = std::max(report.max_defect, defect);
    report.max_norm_defect = std::max(report.max_norm_defect, norm_defect);
  }
  report.ok = report.max_defect <= tol && report.max_norm_defect <= tol;
  return report;
}

std::pair<Jet, Jet> curvature_jets(const LegendreCurve& curve, double t0, int order) {
  const FrameJets f = curve.frame(t0, order + 1);
  const Jet nx = f.nx.truncated(order);
  const Jet ny = f.ny.truncated(order);
  // mu = (-ny, nx)
  Jet ell = f.ny.differentiated() * nx - f.nx.differentiated() * ny;
  Jet beta = f.y.differentiated() * nx - f.x.differentiated() * ny;
  return {ell, beta};
}

CurvatureValue curvature(const LegendreCurve& curve, double t) {
  auto [ell, beta] = curvature_jets(curve, t, 0);
  return {ell.value(), beta.value()};
}

CurvaturePair curvature_pair(const LegendreCurve& curve) {
  return {ScalarFunction([curve](double t0, int order) { return curvature_jets(curve, t0, order).first; }),
          ScalarFunction([curve](double t0, int order) { return curvature_jets(curve, t0, order).second; })};
}

CurvaturePair curvature_pair(const Expr& ell, const Expr& beta) { return {to_function(ell), to_function(beta)}; }

std::pair<ScalarFunction, ScalarFunction> derive_nu(const Expr& x, const Expr& y, Interval domain) {
  require_regular(x, y, domain);
  auto component = [x, y](int index) {
    return ScalarFunction([x, y, index](double t0, int order) {
      return derived_normal(eval_jet(x, t0, order + 1), eval_jet(y, t0, order + 1))[index];
    });
  };
  return {component(0), component(1)};
}

ImmersionReport is_immersion(const LegendreCurve& curve, int samples) {
  const CurvaturePair k = curvature_pair(curve);
  ImmersionReport report;
  ZeroSearchOptions options;
  options.grid_n = std::max(64, samples);
  options.periodic = curve.closed();
  try {
    const GridSamples ell = sample_grid(k.ell, curve.domain(), options.grid_n);
    double ell_scale = 0.0;
    for (double v : ell.value) ell_scale = std::max(ell_scale, std::abs(v));
    for (const LocatedZero& z : locate_zeros(k.beta, curve.domain(), options)) {
      if (coefficient_vanishes(k.ell(z.t, kDefaultJetOrder), 0, {.scale = ell_scale})) report.witnesses.push_back(z.t);
    }
  } catch (const Error&) {
    // beta vanishes on a whole stretch: fall back to the sample grid.
    double scale = 0.0;
    std::vector<CurvatureValue> values;
    for (int i = 0; i <= options.grid_n; ++i) {
      values.push_back(curvature(curve, curve.domain().node(i, options.grid_n)));
      scale = std::max({scale, std::abs(values.back().ell), std::abs(values.back().beta)});
    }
    for (int i = 0; i <= options.grid_n; ++i) {
      if (std::max(std::abs(values[i].ell), std::abs(values[i].beta)) <= 1e-9 * std::max(1.0, scale)) {
        report.witnesses.push_back(curve.domain().node(i, options.grid_n));
      }
    }
  }
  report.ok = report.witnesses.empty();
  return report;
}

ClosedReport check_closed(const LegendreCurve& curve, int max_order, double tol) {
  if (max_order < 0 || max_order > kMaxJetOrder) throw Error("jet order exceeded");
  ClosedReport report;
  const FrameJets a = curve.frame(curve.domain().lo, max_order);
  const FrameJets b = curve.frame(curve.domain().hi, max_order);
  for (int k = 0; k <= max_order; ++k) {
    for (auto [ja, jb] : {std::pair{&a.x, &b.x}, {&a.y, &b.y}, {&a.nx, &b.nx}, {&a.ny, &b.ny}}) {
      const double da = ja->derivative(k);
      const double db = jb->derivative(k);
      if (std::abs(da - db) > tol * std::max({1.0, std::abs(da), std::abs(db)})) return report;
    }
    report.closed_order = k;
  }
  report.to_checked_order = true;
  return report;
}

}  // namespace legendre
