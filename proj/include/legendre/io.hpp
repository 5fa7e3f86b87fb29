#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of curve specs, signatures and verdicts.
 *
 * Curve spec:
 *   {"x": "cos(t)", "y": "sin(t)", "nu": ["cos(t)", "sin(t)"],
 *    "domain": [0, "2*pi"], "closed": true, "params": {"n": 3}}
 * "nu" and "params" are optional; domain ends may be numbers or constant
 * expressions.
 */

#include <string>
#include <string_view>

#include "json.hpp"
#include "legendre/curve.hpp"
#include "legendre/signature.hpp"

namespace legendre {

// Malformed documents throw UsageError; bad expressions throw ParseError.
CurveSpec curve_spec_from_json(const nlohmann::json& j);
CurveSpec parse_curve_spec(std::string_view text);
CurveSpec load_curve_spec(const std::string& path);
nlohmann::json to_json(const CurveSpec& spec);

// Value of an expression without variables, e.g. "2*pi".
double parse_constant(std::string_view text);

nlohmann::json to_json(const Signature& sig);
nlohmann::json to_json(const EquivalenceVerdict& verdict);
nlohmann::json to_json(const ParityReport& report);

}  // namespace legendre
