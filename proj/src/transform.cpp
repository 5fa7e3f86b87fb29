#include "legendre/transform.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace legendre {

namespace {

CurvaturePair law_from(const LegendreCurve& curve, std::function<std::pair<Jet, Jet>(const LegendreCurve&, double, int)> fn) {
  return {ScalarFunction([curve, fn](double t0, int order) { return fn(curve, t0, order).first; }),
          ScalarFunction([curve, fn](double t0, int order) { return fn(curve, t0, order).second; })};
}

template <class S>
struct PlaneMap {
  BiJet2<S> phi1;
  BiJet2<S> phi2;
};

template <class S>
PlaneMap<S> evaluate_map(const DiffeoSpec& d, const S& x, const S& y) {
  const Bindings<BiJet2<S>> env{BiJet2<S>::constant(constant_like(0.0, x)), BiJet2<S>::variable_x(x),
                                BiJet2<S>::variable_y(y)};
  return {evaluate(d.phi1.root(), env), evaluate(d.phi2.root(), env)};
}

template <class S>
struct MappedFrame {
  S nbx;
  S nby;
  S norm2;
};

// nubar = (phi2_y a - phi2_x b, -phi1_y a + phi1_x b) for nu = (a, b).
template <class S>
MappedFrame<S> mapped_normal(const PlaneMap<S>& m, const S& a, const S& b) {
  MappedFrame<S> f{m.phi2.grad[1] * a - m.phi2.grad[0] * b, m.phi1.grad[0] * b - m.phi1.grad[1] * a, {}};
  f.norm2 = f.nbx * f.nbx + f.nby * f.nby;
  return f;
}

template <class S>
std::pair<S, S> diffeo_law(const PlaneMap<S>& m, const MappedFrame<S>& f, const S& a, const S& b, const S& ell,
                           const S& beta) {
  using std::sqrt;
  const auto& p1 = m.phi1;
  const auto& p2 = m.phi2;
  const S q2 = p2.hess[0] * (b * b) - 2.0 * (p2.hess[1] * (a * b)) + p2.hess[2] * (a * a);
  const S q1 = p1.hess[0] * (b * b) - 2.0 * (p1.hess[1] * (a * b)) + p1.hess[2] * (a * a);
  const S jac = p1.grad[0] * p2.grad[1] - p2.grad[0] * p1.grad[1];
  const S second = q2 * (p1.grad[1] * a - p1.grad[0] * b) - q1 * (p2.grad[1] * a - p2.grad[0] * b);
  const S ell_new = (second * beta + jac * ell) / f.norm2;
  const S beta_new = sqrt(f.norm2) * beta;
  return {ell_new, beta_new};
}

void require_nondegenerate(double norm2, double t) {
  if (!(norm2 > 1e-24)) throw Error(fmt::format("diffeomorphism degenerates along the curve (t={:.17g})", t));
}

}  // namespace

Transformed reparametrize(const LegendreCurve& curve, const Expr& t_of_u, Interval new_domain) {
  if (t_of_u.arity() != Arity::one_var) throw Error("parameter change must be an expression in t");
  if (!(new_domain.hi > new_domain.lo)) throw Error("domain must satisfy a < b");
  int sign = 0;
  for (int i = 0; i <= kLegendreGrid; ++i) {
    const double u = new_domain.node(i, kLegendreGrid);
    const Jet tj = eval_jet(t_of_u, u, 1);
    const int s = (tj[1] > 0) - (tj[1] < 0);
    if (s == 0 || (sign != 0 && s != sign)) throw Error(fmt::format("not a parameter change (t' vanishes near u={:.17g})", u));
    sign = s;
    if (!curve.domain().contains(tj[0], 1e-12 * (1.0 + curve.domain().length()))) {
      throw Error(fmt::format("parameter change leaves the curve's domain (u={:.17g})", u));
    }
  }

  // Clamp so that rounding at the ends cannot step outside the original domain.
  auto inner = [t_of_u, dom = curve.domain()](double u0, int order) {
    Jet tj = eval_jet(t_of_u, u0, order);
    tj[0] = std::clamp(tj[0], dom.lo, dom.hi);
    return tj;
  };
  FrameFunction frame = [curve, inner](double u0, int order) {
    const Jet tj = inner(u0, order);
    const FrameJets f = curve.frame(tj.value(), order);
    return FrameJets{compose(f.x, tj), compose(f.y, tj), compose(f.nx, tj), compose(f.ny, tj)};
  };
  const double t_lo = eval(t_of_u, new_domain.lo);
  const double t_hi = eval(t_of_u, new_domain.hi);
  const double slack = 1e-12 * (1.0 + curve.domain().length());
  const bool ends_to_ends = (std::abs(t_lo - curve.domain().lo) <= slack && std::abs(t_hi - curve.domain().hi) <= slack) ||
                            (std::abs(t_hi - curve.domain().lo) <= slack && std::abs(t_lo - curve.domain().hi) <= slack);
  LegendreCurve out(std::move(frame), new_domain, curve.closed() && ends_to_ends);

  const CurvaturePair k = curvature_pair(curve);
  auto composed = [inner](const ScalarFunction& f) {
    return ScalarFunction([f, inner](double u0, int order) {
      const Jet tj = inner(u0, order + 1);
      return compose(f(tj.value(), order), tj.truncated(order)) * tj.differentiated();
    });
  };
  return {std::move(out), {composed(k.ell), composed(k.beta)}};
}

Transformed pushforward_affine(const LegendreCurve& curve, const AffineMap& map) {
  const double det = map.det();
  if (det == 0.0) throw Error("affine map must be invertible (det = 0)");
  auto normal = [map](const Jet& a, const Jet& b) {
    return std::pair{map.a22 * a - map.a21 * b, map.a11 * b - map.a12 * a};
  };
  FrameFunction frame = [curve, map, normal](double t0, int order) {
    const FrameJets f = curve.frame(t0, order);
    auto [bx, by] = normal(f.nx, f.ny);
    const Jet len = sqrt(bx * bx + by * by);
    return FrameJets{map.a11 * f.x + map.a12 * f.y, map.a21 * f.x + map.a22 * f.y, bx / len, by / len};
  };
  LegendreCurve out(std::move(frame), curve.domain(), curve.closed());
  CurvaturePair law = law_from(curve, [det, normal](const LegendreCurve& c, double t0, int order) {
    auto [ell, beta] = curvature_jets(c, t0, order);
    const FrameJets f = c.frame(t0, order);
    auto [bx, by] = normal(f.nx, f.ny);
    const Jet n2 = bx * bx + by * by;
    return std::pair{det * ell / n2, sqrt(n2) * beta};
  });
  return {std::move(out), std::move(law)};
}

Transformed pushforward_swap(const LegendreCurve& curve) {
  FrameFunction frame = [curve](double t0, int order) {
    const FrameJets f = curve.frame(t0, order);
    return FrameJets{f.y, f.x, -f.ny, -f.nx};
  };
  LegendreCurve out(std::move(frame), curve.domain(), curve.closed());
  CurvaturePair law = law_from(curve, [](const LegendreCurve& c, double t0, int order) {
    auto [ell, beta] = curvature_jets(c, t0, order);
    return std::pair{-ell, beta};
  });
  return {std::move(out), std::move(law)};
}

Transformed negate(const LegendreCurve& curve, Negation which) {
  FrameFunction frame = [curve, which](double t0, int order) {
    const FrameJets f = curve.frame(t0, order);
    if (which == Negation::nu) return FrameJets{f.x, f.y, -f.nx, -f.ny};
    return FrameJets{-f.x, -f.y, f.nx, f.ny};
  };
  LegendreCurve out(std::move(frame), curve.domain(), curve.closed());
  CurvaturePair law = law_from(curve, [](const LegendreCurve& c, double t0, int order) {
    auto [ell, beta] = curvature_jets(c, t0, order);
    return std::pair{ell, -beta};
  });
  return {std::move(out), std::move(law)};
}

DiffeoSpec DiffeoSpec::parse(std::string_view text) {
  const std::size_t split = text.find(';');
  if (split == std::string_view::npos) throw UsageError("diffeomorphism must be given as \"P1;P2\"");
  return {parse_expr(text.substr(0, split), Arity::two_var), parse_expr(text.substr(split + 1), Arity::two_var)};
}

DiffeoPoint pushforward_diffeo(const LegendreCurve& curve, const DiffeoSpec& diffeo, double t) {
  const FrameJets f = curve.frame(t, 0);
  const double a = f.nx.value();
  const double b = f.ny.value();
  const PlaneMap<double> m = evaluate_map(diffeo, f.x.value(), f.y.value());
  const MappedFrame<double> nf = mapped_normal(m, a, b);
  require_nondegenerate(nf.norm2, t);
  const CurvatureValue k = curvature(curve, t);
  auto [ell, beta] = diffeo_law(m, nf, a, b, k.ell, k.beta);
  const double len = std::sqrt(nf.norm2);
  return {ell, beta, {nf.nbx / len, nf.nby / len}};
}

Transformed pushforward_diffeo(const LegendreCurve& curve, const DiffeoSpec& diffeo) {
  for (int i = 0; i <= kLegendreGrid; ++i) {
    const double t = curve.domain().node(i, kLegendreGrid);
    const FrameJets f = curve.frame(t, 0);
    const PlaneMap<double> m = evaluate_map(diffeo, f.x.value(), f.y.value());
    require_nondegenerate(mapped_normal(m, f.nx.value(), f.ny.value()).norm2, t);
  }
  FrameFunction frame = [curve, diffeo](double t0, int order) {
    const FrameJets f = curve.frame(t0, order);
    const PlaneMap<Jet> m = evaluate_map(diffeo, f.x, f.y);
    const MappedFrame<Jet> nf = mapped_normal(m, f.nx, f.ny);
    const Jet len = sqrt(nf.norm2);
    return FrameJets{m.phi1.value, m.phi2.value, nf.nbx / len, nf.nby / len};
  };
  LegendreCurve out(std::move(frame), curve.domain(), curve.closed());
  CurvaturePair law = law_from(curve, [diffeo](const LegendreCurve& c, double t0, int order) {
    auto [ell, beta] = curvature_jets(c, t0, order);
    const FrameJets f = c.frame(t0, order);
    const PlaneMap<Jet> m = evaluate_map(diffeo, f.x, f.y);
    const MappedFrame<Jet> nf = mapped_normal(m, f.nx, f.ny);
    return diffeo_law(m, nf, f.nx, f.ny, ell, beta);
  });
  return {std::move(out), std::move(law)};
}

}  // namespace legendre
