#pragma once

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls the library's root finder, jets or integrators.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "legendre/expr.hpp"
#include "legendre/vec2.hpp"

namespace oracle {

struct BruteRoot {
  double t;
  bool touch;  // found as a local minimum of |f| without a sign change
};

// Dense uniform scan: exact zeros, sign changes refined by bisection, and
// local minima of |f| below tol * max|f| refined by parabolic vertex steps.
// With periodic, a root at the right end is identified with the left end.
std::vector<BruteRoot> brute_force_roots(const std::function<double(double)>& f, legendre::Interval domain,
                                         int points = 1'000'000, double tol = 1e-9, bool periodic = false);

// Central difference with step h.
double central_difference(const std::function<double(double)>& f, double t, double h = 1e-5);

// Random tree over the expression grammar. Numbers are non-negative since
// the grammar has no negative literals.
legendre::NodePtr random_ast(std::mt19937_64& rng, legendre::Arity arity, int depth);

// Parameter change u -> a + (b - a)(s + alpha sin(2 pi k s) / (2 pi k)),
// s = (u - c)/(d - c), as an expression in t (the new parameter).
std::string periodic_reparam(double a, double b, double c, double d, double alpha, int k);

}  // namespace oracle
