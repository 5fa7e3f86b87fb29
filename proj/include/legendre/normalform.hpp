#pragma once

/**
 * @file normalform.hpp
 * @brief Type (n, m) germs gamma = (+-t^n, t^m f(t)) and the representative
 * curves of their curvature-equivalence classes at t = 0.
 *
 * Germs live on [-1, 1] and are compared through LocalSignature at 0, where
 * an order of 0 means the function does not vanish there.
 */

#include <optional>
#include <string>

#include "legendre/curve.hpp"
#include "legendre/expr.hpp"
#include "legendre/signature.hpp"

namespace legendre {

enum class GermCase {
  below_diagonal,      // n < m: (t^n, t^m)
  diagonal_plain,      // n = m: (t^n, t^n), ell vanishes identically
  diagonal_perturbed,  // n = m: (t^n, t^n (1 + t^p))
  above_diagonal,      // n > m: (t^n, t^m) with the frame turned by a quarter
};

// Accepts "below-diagonal", "diagonal-plain", "diagonal-perturbed",
// "above-diagonal" and the short names 1, 2i, 2ii, 3.
GermCase parse_germ_case(std::string_view text);
std::string to_string(GermCase c);

struct GermData {
  GermCase kind = GermCase::below_diagonal;
  int n = 2;
  int m = 3;
  int p = 1;     // diagonal_perturbed only
  int sign = 1;  // sign of the first component for type (n, m) germs
  std::optional<std::string> f;  // defaults to 1
  double c = 1.0;                // diagonal cases

  int k() const { return m > n ? m - n : n - m; }
};

// Throws Error naming the violated condition.
void validate(const GermData& germ);

// (sign t^n, t^m f) with nu = (-(m t^k f + t^(k+1) f'), sign n) / |.| on [-1, 1].
// Requires n < m and f(0) != 0 ("f must not vanish at 0").
LegendreCurve type_nm_curve(int n, int m, const Expr& f, int sign = 1);

// Text form of the representative curve; exponents are written out as
// integer literals.
CurveSpec normal_form_spec(const GermData& germ);
LegendreCurve local_normal_form(const GermData& germ);

LocalSignature germ_signature(const GermData& germ);

}  // namespace legendre
