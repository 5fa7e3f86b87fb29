#include "legendre/render.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <iterator>
#include <limits>

namespace legendre {

std::string render_svg(const LegendreCurve& curve, const Signature& sig, const RenderConfig& cfg) {
  if (cfg.width <= 0 || cfg.height <= 0) throw Error("render size must be positive");
  if (cfg.samples < 2) throw Error("render needs at least 2 samples");
  if (cfg.margin_fraction < 0.0 || cfg.margin_fraction >= 0.5) throw Error("margin fraction must lie in [0, 0.5)");

  std::vector<Vec2> pts;
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi = -lo;
  for (int i = 0; i < cfg.samples; ++i) {
    const Vec2 p = curve.gamma(curve.domain().node(i, cfg.samples - 1));
    pts.push_back(p);
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  double extent = std::max(hi.x - lo.x, hi.y - lo.y);
  if (extent < 1e-12) {
    const Vec2 c = 0.5 * (lo + hi);
    lo = c - Vec2{0.5, 0.5};
    hi = c + Vec2{0.5, 0.5};
    extent = 1.0;
  }
  const double w = std::max(hi.x - lo.x, 1e-12 * extent);
  const double h = std::max(hi.y - lo.y, 1e-12 * extent);
  const double avail_w = cfg.width * (1.0 - 2.0 * cfg.margin_fraction);
  const double avail_h = cfg.height * (1.0 - 2.0 * cfg.margin_fraction);
  const double scale = std::min(avail_w / w, avail_h / h);
  const double ox = 0.5 * (cfg.width - scale * w);
  const double oy = 0.5 * (cfg.height - scale * h);
  // SVG y grows downwards.
  auto to_screen = [&](Vec2 p) { return Vec2{ox + scale * (p.x - lo.x), cfg.height - (oy + scale * (p.y - lo.y))}; };

  std::string svg;
  auto out = std::back_inserter(svg);
  fmt::format_to(out,
                 "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
                 "viewBox=\"0 0 {0} {1}\">\n",
                 cfg.width, cfg.height);
  svg += "<path fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 s = to_screen(pts[i]);
    fmt::format_to(out, "{}{:.17g} {:.17g}", i == 0 ? "M" : " L", s.x, s.y);
  }
  if (curve.closed()) svg += " Z";
  svg += "\"/>\n";
  for (const ZeroPoint& z : sig.zeros) {
    const Vec2 s = to_screen(curve.gamma(z.t));
    const bool singular = z.kind != ZeroKind::inflection;
    const bool inflection = z.kind != ZeroKind::singular;
    if (singular && cfg.mark_singular) {
      fmt::format_to(out, "<circle cx=\"{:.17g}\" cy=\"{:.17g}\" r=\"4\" fill=\"red\"/>\n", s.x, s.y);
    }
    if (inflection && cfg.mark_inflection) {
      fmt::format_to(out, "<circle cx=\"{:.17g}\" cy=\"{:.17g}\" r=\"6\" fill=\"none\" stroke=\"blue\"/>\n", s.x, s.y);
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace legendre
