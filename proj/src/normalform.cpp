#include "legendre/normalform.hpp"

#include <cmath>
#include <fmt/format.h>

namespace legendre {

namespace {

constexpr Interval kGermDomain{-1.0, 1.0};

}  // namespace

GermCase parse_germ_case(std::string_view text) {
  if (text == "below-diagonal" || text == "1") return GermCase::below_diagonal;
  if (text == "diagonal-plain" || text == "2i") return GermCase::diagonal_plain;
  if (text == "diagonal-perturbed" || text == "2ii") return GermCase::diagonal_perturbed;
  if (text == "above-diagonal" || text == "3") return GermCase::above_diagonal;
  throw UsageError(fmt::format("unknown normal form case '{}'", text));
}

std::string to_string(GermCase c) {
  switch (c) {
    case GermCase::below_diagonal: return "below-diagonal";
    case GermCase::diagonal_plain: return "diagonal-plain";
    case GermCase::diagonal_perturbed: return "diagonal-perturbed";
    case GermCase::above_diagonal: return "above-diagonal";
  }
  return "?";
}

void validate(const GermData& g) {
  if (g.n < 1 || g.m < 1) throw Error("germ exponents must be positive");
  if (g.sign != 1 && g.sign != -1) throw Error("germ sign must be +1 or -1");
  switch (g.kind) {
    case GermCase::below_diagonal:
      if (!(g.n < g.m)) throw Error("below-diagonal germ requires n < m");
      break;
    case GermCase::diagonal_plain:
    case GermCase::diagonal_perturbed:
      if (g.n != g.m) throw Error("diagonal germ requires n = m");
      if (g.c == 0.0) throw Error("diagonal germ requires c != 0");
      if (g.kind == GermCase::diagonal_perturbed && g.p < 1) throw Error("diagonal-perturbed germ requires p >= 1");
      break;
    case GermCase::above_diagonal:
      if (!(g.n > g.m)) throw Error("above-diagonal germ requires n > m");
      break;
  }
  if (g.f) {
    const Expr f = parse_expr(*g.f, Arity::one_var);
    if (std::abs(eval(f, 0.0)) <= 1e-12) throw Error("f must not vanish at 0");
  }
}

LegendreCurve type_nm_curve(int n, int m, const Expr& f, int sign) {
  if (n < 1 || !(n < m)) throw Error("type (n, m) germ requires 1 <= n < m");
  if (sign != 1 && sign != -1) throw Error("germ sign must be +1 or -1");
  if (f.arity() != Arity::one_var) throw Error("f must be an expression in t");
  if (std::abs(eval(f, 0.0)) <= 1e-12) throw Error("f must not vanish at 0");
  const int k = m - n;
  FrameFunction frame = [n, m, k, f, sign](double t0, int order) {
    const Jet t = Jet::variable(t0, order);
    const Jet fj = eval_jet(f, t0, order + 1);
    const Jet fo = fj.truncated(order);
    const Jet w = m * pow_int(t, k) * fo + pow_int(t, k + 1) * fj.differentiated();
    const Jet len = sqrt(w * w + static_cast<double>(n) * n);
    return FrameJets{sign * pow_int(t, n), pow_int(t, m) * fo, -w / len, (sign * n) / len};
  };
  return LegendreCurve(std::move(frame), kGermDomain, false);
}

CurveSpec normal_form_spec(const GermData& g) {
  validate(g);
  const int n = g.n;
  const int m = g.m;
  const int k = g.k();
  CurveSpec spec;
  spec.domain = kGermDomain;
  spec.x = fmt::format("t^{}", n);
  switch (g.kind) {
    case GermCase::below_diagonal: {
      const std::string len = fmt::format("sqrt({}*t^{} + {})", m * m, 2 * k, n * n);
      spec.y = fmt::format("t^{}", m);
      spec.nu = {{fmt::format("-{}*t^{}/{}", m, k, len), fmt::format("{}/{}", n, len)}};
      break;
    }
    case GermCase::diagonal_plain:
      spec.y = fmt::format("t^{}", n);
      spec.nu = {{"-1/sqrt(2)", "1/sqrt(2)"}};
      break;
    case GermCase::diagonal_perturbed: {
      const int p = g.p;
      const std::string w = fmt::format("({}*(1 + t^{}) + {}*t^{})", n, p, p, p);
      const std::string len = fmt::format("sqrt({}^2 + {})", w, n * n);
      spec.y = fmt::format("t^{}*(1 + t^{})", n, p);
      spec.nu = {{fmt::format("-{}/{}", w, len), fmt::format("{}/{}", n, len)}};
      break;
    }
    case GermCase::above_diagonal: {
      const std::string len = fmt::format("sqrt({} + {}*t^{})", m * m, n * n, 2 * k);
      spec.y = fmt::format("t^{}", m);
      spec.nu = {{fmt::format("{}/{}", m, len), fmt::format("-{}*t^{}/{}", n, k, len)}};
      break;
    }
  }
  return spec;
}

LegendreCurve local_normal_form(const GermData& germ) { return LegendreCurve::from_spec(normal_form_spec(germ)); }

LocalSignature germ_signature(const GermData& g) {
  validate(g);
  switch (g.kind) {
    case GermCase::below_diagonal: return {false, g.k() - 1, g.n - 1};
    case GermCase::diagonal_plain: return {true, 0, g.n - 1};
    case GermCase::diagonal_perturbed: return {false, g.p - 1, g.n - 1};
    case GermCase::above_diagonal: return {false, g.k() - 1, g.m - 1};
  }
  return {};
}

}  // namespace legendre
