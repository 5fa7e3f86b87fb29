#pragma once

/**
 * @file gallery.hpp
 * @brief Built-in curves with known curvature pairs.
 *
 *   circle    (cos t, sin t)                                   on [0, 2 pi]
 *   gamma_ab  (sin a t, sin b t), a != b                       on [0, 2 pi]
 *   gamma_n   (n cos t - cos n t, n sin t - sin n t), n != 1   on [0, 2 pi]
 *   gamma_m   (m sin t - sin m t, m cos t + cos m t)           on [0, 2 pi]
 *   type_nm   (sign t^n, t^m), n < m                           on [-1, 1]
 *
 * gamma_n and gamma_m are closed as Legendre curves only for odd n and m:
 * for even values nu changes sign over one period.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/expr.hpp"

namespace legendre {

struct GalleryEntry {
  std::string name;
  CurveSpec spec;  // templates with params filled in
  LegendreCurve curve;
  // Closed-form (ell, beta) after parameter substitution.
  std::optional<std::array<std::string, 2>> curvature_text;
  std::string provenance;

  std::optional<std::pair<Expr, Expr>> curvature_closed_form() const;
};

struct GalleryInfo {
  std::string name;
  std::map<std::string, double> defaults;
  std::string description;
};

std::vector<GalleryInfo> gallery_list();

// True when no n, m >= 0 with 1 + 2n < 4a, 1 + 2m < 4b satisfy
// b (1 + 2n) = a (1 + 2m); this keeps cos(a t) and cos(b t) from vanishing
// together. Throws "requires a != b".
bool check_ab_assumption(int a, int b);

// Unknown names and invalid parameters throw Error. Missing parameters take
// their defaults.
GalleryEntry gallery(std::string_view name, const std::map<std::string, double>& params = {});

}  // namespace legendre
