#include "legendre/io.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>

namespace legendre {

namespace {

using nlohmann::json;

bool has_variable(const Node& node) {
  struct Visitor {
    bool operator()(const NumberNode&) const { return false; }
    bool operator()(const PiNode&) const { return false; }
    bool operator()(const VarNode&) const { return true; }
    bool operator()(const UnaryNode& u) const { return has_variable(*u.child); }
    bool operator()(const BinaryNode& b) const { return has_variable(*b.lhs) || has_variable(*b.rhs); }
    bool operator()(const PowIntNode& p) const { return has_variable(*p.base); }
  };
  return std::visit(Visitor{}, node.data);
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw UsageError(fmt::format("curve spec needs a string field \"{}\"", key));
  return j[key].get<std::string>();
}

double domain_end(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_constant(v.get<std::string>());
  throw UsageError("curve spec domain entries must be numbers or constant expressions");
}

json optional_order(const std::optional<int>& o) { return o ? json(*o) : json(nullptr); }

}  // namespace

double parse_constant(std::string_view text) {
  const Expr e = parse_expr(text, Arity::one_var);
  if (has_variable(e.root())) throw UsageError(fmt::format("expected a constant, got '{}'", text));
  return eval(e, 0.0);
}

CurveSpec curve_spec_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("curve spec must be a JSON object");
  CurveSpec spec;
  spec.x = require_string(j, "x");
  spec.y = require_string(j, "y");
  if (j.contains("nu") && !j["nu"].is_null()) {
    const json& nu = j["nu"];
    if (!nu.is_array() || nu.size() != 2 || !nu[0].is_string() || !nu[1].is_string()) {
      throw UsageError("curve spec \"nu\" must be an array of two strings");
    }
    spec.nu = {{nu[0].get<std::string>(), nu[1].get<std::string>()}};
  }
  if (!j.contains("domain") || !j["domain"].is_array() || j["domain"].size() != 2) {
    throw UsageError("curve spec needs \"domain\": [a, b]");
  }
  spec.domain = {domain_end(j["domain"][0]), domain_end(j["domain"][1])};
  if (j.contains("closed")) {
    if (!j["closed"].is_boolean()) throw UsageError("curve spec \"closed\" must be a boolean");
    spec.closed = j["closed"].get<bool>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw UsageError("curve spec \"params\" must be an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!value.is_number()) throw UsageError(fmt::format("parameter \"{}\" must be a number", key));
      spec.params[key] = value.get<double>();
    }
  }
  return spec;
}

CurveSpec parse_curve_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(fmt::format("curve spec is not valid JSON: {}", e.what()));
  }
  return curve_spec_from_json(j);
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read curve file '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_curve_spec(buffer.str());
}

json to_json(const CurveSpec& spec) {
  json j;
  j["x"] = spec.x;
  j["y"] = spec.y;
  if (spec.nu) j["nu"] = {(*spec.nu)[0], (*spec.nu)[1]};
  j["domain"] = {spec.domain.lo, spec.domain.hi};
  j["closed"] = spec.closed;
  if (!spec.params.empty()) j["params"] = spec.params;
  return j;
}

json to_json(const Signature& sig) {
  json zeros = json::array();
  for (const ZeroPoint& z : sig.zeros) {
    zeros.push_back({{"t", z.t}, {"kind", to_string(z.kind)}, {"ord_ell", optional_order(z.ord_ell)},
                     {"ord_beta", optional_order(z.ord_beta)}});
  }
  return {{"domain", {sig.domain.lo, sig.domain.hi}},
          {"closed", sig.closed},
          {"ell_identically_zero", sig.ell_identically_zero},
          {"zeros", zeros}};
}

json to_json(const EquivalenceVerdict& v) {
  return {{"equivalent", v.equivalent}, {"matching", to_string(v.matching)}, {"shift", v.shift}, {"reason", v.reason}};
}

json to_json(const ParityReport& r) {
  return {{"ell_odd_count", r.ell_odd_count}, {"beta_odd_count", r.beta_odd_count}, {"ok", r.ok}};
}

}  // namespace legendre
