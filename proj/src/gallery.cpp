#include "legendre/gallery.hpp"

#include <cmath>
#include <fmt/format.h>

namespace legendre {

namespace {

constexpr double kTwoPi = 6.283185307179586;

struct Template {
  std::string_view name;
  std::map<std::string, double> defaults;
  std::string_view description;
  std::string_view x;
  std::string_view y;
  std::array<std::string_view, 2> nu;
  std::array<std::string_view, 2> curvature;
};

const std::vector<Template>& templates() {
  static const std::vector<Template> list = {
      {"circle", {}, "unit circle with the outward normal", "cos(t)", "sin(t)", {"cos(t)", "sin(t)"}, {"1", "1"}},
      {"gamma_ab",
       {{"a", 1}, {"b", 2}},
       "Lissajous front (sin at, sin bt); regular, inflections where the cos terms balance",
       "sin(a*t)",
       "sin(b*t)",
       {"-b*cos(b*t)/sqrt(a^2*cos(a*t)^2 + b^2*cos(b*t)^2)", "a*cos(a*t)/sqrt(a^2*cos(a*t)^2 + b^2*cos(b*t)^2)"},
       {"-a*b*(b*cos(a*t)*sin(b*t) - a*sin(a*t)*cos(b*t))/(a^2*cos(a*t)^2 + b^2*cos(b*t)^2)",
        "-sqrt(a^2*cos(a*t)^2 + b^2*cos(b*t)^2)"}},
      {"gamma_n",
       {{"n", 3}},
       "epicycloid-type front with n - 1 cusps; ell constant",
       "n*cos(t) - cos(n*t)",
       "n*sin(t) - sin(n*t)",
       {"sin((n + 1)*t/2)", "-cos((n + 1)*t/2)"},
       {"(n + 1)/2", "2*n*sin((n - 1)*t/2)"}},
      {"gamma_m",
       {{"m", 3}},
       "hypocycloid-type front with m + 1 cusps; ell vanishes identically for m = 1",
       "m*sin(t) - sin(m*t)",
       "m*cos(t) + cos(m*t)",
       {"-cos((m - 1)*t/2)", "-sin((m - 1)*t/2)"},
       {"(m - 1)/2", "2*m*sin((m + 1)*t/2)"}},
  };
  return list;
}

int integer_param(const std::map<std::string, double>& params, const std::string& key) {
  const double v = params.at(key);
  if (v != std::floor(v) || std::abs(v) > 1e6) throw Error(fmt::format("parameter {} must be an integer", key));
  return static_cast<int>(v);
}

GalleryEntry type_nm_entry(std::map<std::string, double> params) {
  const int n = integer_param(params, "n");
  const int m = integer_param(params, "m");
  const int sign = integer_param(params, "sign");
  if (n < 1 || !(n < m)) throw Error("type_nm requires 1 <= n < m");
  if (sign != 1 && sign != -1) throw Error("type_nm requires sign = 1 or -1");
  const int k = m - n;
  const std::string len = fmt::format("sqrt({}*t^{} + {})", m * m, 2 * k, n * n);
  CurveSpec spec;
  spec.x = fmt::format("{}*t^{}", sign, n);
  spec.y = fmt::format("t^{}", m);
  spec.nu = {{fmt::format("-{}*t^{}/{}", m, k, len), fmt::format("{}/{}", sign * n, len)}};
  spec.domain = {-1.0, 1.0};
  spec.closed = false;
  LegendreCurve curve = LegendreCurve::from_spec(spec);
  std::array<std::string, 2> curvature = {
      fmt::format("{}*t^{}/({}*t^{} + {})", sign * n * m * k, k - 1, m * m, 2 * k, n * n),
      fmt::format("-t^{}*{}", n - 1, len)};
  return {"type_nm", std::move(spec), std::move(curve), std::move(curvature),
          "type (n, m) germ (sign t^n, t^m) on [-1, 1]"};
}

}  // namespace

std::optional<std::pair<Expr, Expr>> GalleryEntry::curvature_closed_form() const {
  if (!curvature_text) return std::nullopt;
  return std::pair{parse_expr((*curvature_text)[0], Arity::one_var), parse_expr((*curvature_text)[1], Arity::one_var)};
}

std::vector<GalleryInfo> gallery_list() {
  std::vector<GalleryInfo> out;
  for (const Template& t : templates()) out.push_back({std::string(t.name), t.defaults, std::string(t.description)});
  out.push_back({"type_nm", {{"n", 2}, {"m", 3}, {"sign", 1}}, "type (n, m) germ (sign t^n, t^m) on [-1, 1]"});
  return out;
}

bool check_ab_assumption(int a, int b) {
  if (a == b) throw Error("requires a != b");
  if (a <= 0 || b <= 0) throw Error("requires positive a and b");
  for (int n = 0; 1 + 2 * n < 4 * a; ++n) {
    for (int m = 0; 1 + 2 * m < 4 * b; ++m) {
      if (b * (1 + 2 * n) == a * (1 + 2 * m)) return false;
    }
  }
  return true;
}

GalleryEntry gallery(std::string_view name, const std::map<std::string, double>& params) {
  std::map<std::string, double> merged;
  const Template* tpl = nullptr;
  if (name == "type_nm") {
    merged = {{"n", 2}, {"m", 3}, {"sign", 1}};
  } else {
    for (const Template& t : templates()) {
      if (t.name == name) tpl = &t;
    }
    if (!tpl) throw Error(fmt::format("unknown gallery curve '{}'", name));
    merged = tpl->defaults;
  }
  for (const auto& [key, value] : params) {
    if (!merged.contains(key)) throw Error(fmt::format("gallery curve '{}' has no parameter '{}'", name, key));
    merged[key] = value;
  }
  if (!tpl) return type_nm_entry(merged);

  bool closed = true;
  if (name == "gamma_ab") {
    const int a = integer_param(merged, "a");
    const int b = integer_param(merged, "b");
    if (!check_ab_assumption(a, b)) {
      throw Error(fmt::format("gamma_ab assumption fails for a={}, b={}: cos(at) and cos(bt) vanish together", a, b));
    }
  } else if (name == "gamma_n") {
    const int n = integer_param(merged, "n");
    if (n == 1) throw Error("gamma_n requires n != 1");
    if (n < 1) throw Error("gamma_n requires n >= 2");
    closed = n % 2 == 1;
  } else if (name == "gamma_m") {
    const int m = integer_param(merged, "m");
    if (m < 1) throw Error("gamma_m requires m >= 1");
    closed = m % 2 == 1;
  }

  CurveSpec spec;
  spec.x = tpl->x;
  spec.y = tpl->y;
  spec.nu = {{std::string(tpl->nu[0]), std::string(tpl->nu[1])}};
  spec.domain = {0.0, kTwoPi};
  spec.closed = closed;
  spec.params = merged;
  LegendreCurve curve = LegendreCurve::from_spec(spec);
  std::array<std::string, 2> curvature = {substitute_params(tpl->curvature[0], merged),
                                          substitute_params(tpl->curvature[1], merged)};
  return {std::string(name), std::move(spec), std::move(curve), std::move(curvature), std::string(tpl->description)};
}

}  // namespace legendre
