#pragma once

#include <string>

#include "legendre/curve.hpp"
#include "legendre/signature.hpp"

namespace legendre {

struct RenderConfig {
  int width = 640;
  int height = 640;
  int samples = 1024;
  bool mark_singular = true;    // filled circles at zeros of beta
  bool mark_inflection = true;  // open circles at zeros of ell
  double margin_fraction = 0.05;
};

// SVG document with the curve as one path. A curve whose image is a single
// point is drawn in a unit box around it.
std::string render_svg(const LegendreCurve& curve, const Signature& sig, const RenderConfig& cfg = {});

}  // namespace legendre
