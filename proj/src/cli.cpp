#include "legendre/cli.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "legendre/gallery.hpp"
#include "legendre/io.hpp"
#include "legendre/normalform.hpp"
#include "legendre/reconstruct.hpp"
#include "legendre/render.hpp"
#include "legendre/signature.hpp"
#include "legendre/transform.hpp"

namespace legendre {

namespace {

struct Options {
  std::string curve;
  std::string curve2;
  int samples = 1000;
  std::string ell;
  std::string beta;
  std::string domain;
  int steps = 1024;
  std::string affine;
  bool swap = false;
  bool negate_nu = false;
  bool negate_gamma = false;
  std::string reparam;
  std::string diffeo;
  std::string germ_case;
  int n = 0;
  int m = 0;
  int p = 1;
  std::string name;
  std::vector<std::string> params;
  std::string output;
  int width = 640;
  int height = 640;
};

LegendreCurve load_curve(const std::string& path) { return LegendreCurve::from_spec(load_curve_spec(path)); }

Interval parse_domain(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) throw UsageError(fmt::format("domain must be given as a:b, got '{}'", text));
  const Interval d{parse_constant(text.substr(0, colon)), parse_constant(text.substr(colon + 1))};
  if (!(d.hi > d.lo)) throw UsageError("domain must satisfy a < b");
  return d;
}

AffineMap parse_affine(const std::string& text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    v.push_back(parse_constant(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw UsageError("--affine expects four entries a11,a12,a21,a22");
  return {v[0], v[1], v[2], v[3]};
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

void cmd_curvature(const Options& o, std::ostream& out) {
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  const LegendreCurve curve = load_curve(o.curve);
  out << "t,ell,beta\n";
  for (int i = 0; i < o.samples; ++i) {
    const double t = curve.domain().node(i, o.samples - 1);
    const CurvatureValue k = curvature(curve, t);
    fmt::print(out, "{:.17g},{:.17g},{:.17g}\n", t, k.ell, k.beta);
  }
}

void cmd_reconstruct(const Options& o, std::ostream& out) {
  const Expr ell = parse_expr(o.ell, Arity::one_var);
  const Expr beta = parse_expr(o.beta, Arity::one_var);
  if (o.steps < 16) throw UsageError("--steps must be at least 16");
  write_curve_csv(out, reconstruct(to_function(ell), to_function(beta), parse_domain(o.domain), o.steps));
}

void cmd_transform(const Options& o, std::ostream& out) {
  const int chosen = !o.affine.empty() + o.swap + o.negate_nu + o.negate_gamma + !o.reparam.empty() + !o.diffeo.empty();
  if (chosen != 1) {
    throw UsageError("transform needs exactly one of --affine, --swap, --negate-nu, --negate-gamma, --reparam, --diffeo");
  }
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  if (!o.reparam.empty() && o.domain.empty()) throw UsageError("--reparam needs --domain c:d");
  // Parse the descriptor before touching the curve so usage errors win.
  std::optional<AffineMap> affine;
  std::optional<DiffeoSpec> diffeo;
  std::optional<Expr> reparam;
  Interval new_domain;
  if (!o.affine.empty()) affine = parse_affine(o.affine);
  if (!o.diffeo.empty()) diffeo = DiffeoSpec::parse(o.diffeo);
  if (!o.reparam.empty()) {
    reparam = parse_expr(o.reparam, Arity::one_var);
    new_domain = parse_domain(o.domain);
  }

  const LegendreCurve curve = load_curve(o.curve);
  const Transformed result = affine        ? pushforward_affine(curve, *affine)
                             : diffeo      ? pushforward_diffeo(curve, *diffeo)
                             : reparam     ? reparametrize(curve, *reparam, new_domain)
                             : o.swap      ? pushforward_swap(curve)
                             : o.negate_nu ? negate(curve, Negation::nu)
                                           : negate(curve, Negation::gamma);
  out << "t,gx,gy,nx,ny,ell,beta\n";
  for (int i = 0; i < o.samples; ++i) {
    const double t = result.curve.domain().node(i, o.samples - 1);
    const FrameJets f = result.curve.frame(t, 0);
    fmt::print(out, "{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", t, f.x.value(), f.y.value(),
               f.nx.value(), f.ny.value(), result.law.ell.value(t), result.law.beta.value(t));
  }
}

void cmd_normal_form(const Options& o, std::ostream& out) {
  GermData germ;
  germ.kind = parse_germ_case(o.germ_case);
  germ.n = o.n;
  germ.p = o.p;
  if (germ.kind == GermCase::diagonal_plain || germ.kind == GermCase::diagonal_perturbed) {
    germ.m = o.m == 0 ? o.n : o.m;
  } else {
    if (o.m == 0) throw UsageError(fmt::format("case {} needs --m", to_string(germ.kind)));
    germ.m = o.m;
  }
  print_json(out, to_json(normal_form_spec(germ)));
}

void cmd_examples_get(const Options& o, std::ostream& out) {
  std::map<std::string, double> params;
  for (const std::string& kv : o.params) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError(fmt::format("--param expects k=v, got '{}'", kv));
    params[kv.substr(0, eq)] = parse_constant(kv.substr(eq + 1));
  }
  print_json(out, to_json(gallery(o.name, params).spec));
}

void cmd_examples_list(std::ostream& out) {
  nlohmann::json list = nlohmann::json::array();
  for (const GalleryInfo& info : gallery_list()) {
    list.push_back({{"name", info.name}, {"params", info.defaults}, {"description", info.description}});
  }
  print_json(out, list);
}

void cmd_render(const Options& o) {
  const LegendreCurve curve = load_curve(o.curve);
  RenderConfig cfg;
  cfg.width = o.width;
  cfg.height = o.height;
  cfg.samples = o.samples;
  const std::string svg = render_svg(curve, signature(curve), cfg);
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError(fmt::format("cannot write '{}'", o.output));
  file << svg;
}

// Builds the curve without trusting the closed flag so that a wrong flag is
// reported rather than rejected.
bool cmd_check(const Options& o, std::ostream& out) {
  CurveSpec spec = load_curve_spec(o.curve);
  const bool flagged = spec.closed;
  spec.closed = false;
  const LegendreCurve curve = LegendreCurve::from_spec(spec);
  const LegendreReport legendre = check_legendre(curve);
  const ClosedReport closed = check_closed(curve);
  const bool closed_ok = !flagged || closed.to_checked_order;
  const bool ok = legendre.ok && closed_ok;
  print_json(out, {{"legendre", legendre.ok},
                   {"max_defect", legendre.max_defect},
                   {"max_norm_defect", legendre.max_norm_defect},
                   {"closed_flag", flagged},
                   {"closed_order", closed.closed_order},
                   {"closed_consistent", closed_ok},
                   {"ok", ok}});
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Legendre curves: curvature pairs, reconstruction, signatures and equivalence", "legendre"};
  app.require_subcommand(1, 1);

  auto* curvature_cmd = app.add_subcommand("curvature", "sample (ell, beta) as CSV");
  curvature_cmd->add_option("--curve", o.curve, "curve spec file")->required();
  curvature_cmd->add_option("--samples", o.samples, "number of samples");

  auto* signature_cmd = app.add_subcommand("signature", "zeros of ell and beta with contact orders");
  signature_cmd->add_option("--curve", o.curve, "curve spec file")->required();

  auto* equivalent_cmd = app.add_subcommand("equivalent", "decide curvature equivalence of two curves");
  equivalent_cmd->add_option("--curve1", o.curve, "first curve spec file")->required();
  equivalent_cmd->add_option("--curve2", o.curve2, "second curve spec file")->required();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "build a curve from (ell, beta)");
  reconstruct_cmd->add_option("--ell", o.ell, "expression in t")->required();
  reconstruct_cmd->add_option("--beta", o.beta, "expression in t")->required();
  reconstruct_cmd->add_option("--domain", o.domain, "a:b")->required();
  reconstruct_cmd->add_option("--steps", o.steps, "grid intervals");

  auto* transform_cmd = app.add_subcommand("transform", "apply a transformation and its curvature law");
  transform_cmd->add_option("--curve", o.curve, "curve spec file")->required();
  transform_cmd->add_option("--affine", o.affine, "a11,a12,a21,a22");
  transform_cmd->add_flag("--swap", o.swap, "exchange x and y");
  transform_cmd->add_flag("--negate-nu", o.negate_nu, "replace nu by -nu");
  transform_cmd->add_flag("--negate-gamma", o.negate_gamma, "replace gamma by -gamma");
  transform_cmd->add_option("--reparam", o.reparam, "old parameter as an expression in the new one");
  transform_cmd->add_option("--domain", o.domain, "new parameter domain c:d");
  transform_cmd->add_option("--diffeo", o.diffeo, "\"P1;P2\" in x and y");
  transform_cmd->add_option("--samples", o.samples, "number of samples");

  auto* normal_cmd = app.add_subcommand("normal-form", "emit the representative germ of a local class");
  normal_cmd->add_option("--case", o.germ_case, "1, 2i, 2ii, 3 or the long case name")->required();
  normal_cmd->add_option("--n", o.n, "first exponent")->required();
  normal_cmd->add_option("--m", o.m, "second exponent");
  normal_cmd->add_option("--p", o.p, "perturbation exponent (case 2ii)");

  auto* parity_cmd = app.add_subcommand("parity", "parity of odd-order zeros on a closed curve");
  parity_cmd->add_option("--curve", o.curve, "curve spec file")->required();

  auto* examples_cmd = app.add_subcommand("examples", "built-in curves");
  examples_cmd->require_subcommand(1, 1);
  auto* list_cmd = examples_cmd->add_subcommand("list", "list built-in curves");
  auto* get_cmd = examples_cmd->add_subcommand("get", "emit the spec of a built-in curve");
  get_cmd->add_option("name", o.name, "curve name")->required();
  get_cmd->add_option("--param", o.params, "k=v (repeatable)");

  auto* render_cmd = app.add_subcommand("render", "draw the curve with its zero points as SVG");
  render_cmd->add_option("--curve", o.curve, "curve spec file")->required();
  render_cmd->add_option("-o,--output", o.output, "SVG file")->required();
  render_cmd->add_option("--width", o.width, "pixels");
  render_cmd->add_option("--height", o.height, "pixels");
  render_cmd->add_option("--samples", o.samples, "polyline vertices");

  auto* check_cmd = app.add_subcommand("check", "Legendre condition and closedness report");
  check_cmd->add_option("--curve", o.curve, "curve spec file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (curvature_cmd->parsed()) {
      cmd_curvature(o, out);
    } else if (signature_cmd->parsed()) {
      print_json(out, to_json(signature(load_curve(o.curve))));
    } else if (equivalent_cmd->parsed()) {
      const Signature a = signature(load_curve(o.curve));
      const Signature b = signature(load_curve(o.curve2));
      print_json(out, to_json(decide_equivalence(a, b)));
    } else if (reconstruct_cmd->parsed()) {
      cmd_reconstruct(o, out);
    } else if (transform_cmd->parsed()) {
      cmd_transform(o, out);
    } else if (normal_cmd->parsed()) {
      cmd_normal_form(o, out);
    } else if (parity_cmd->parsed()) {
      print_json(out, to_json(parity_check(signature(load_curve(o.curve)))));
    } else if (list_cmd->parsed()) {
      cmd_examples_list(out);
    } else if (get_cmd->parsed()) {
      cmd_examples_get(o, out);
    } else if (render_cmd->parsed()) {
      cmd_render(o);
    } else if (check_cmd->parsed()) {
      return cmd_check(o, out) ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "legendre: usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "legendre: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace legendre
