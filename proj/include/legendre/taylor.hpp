#pragma once

/**
 * @file taylor.hpp
 * @brief Truncated Taylor jets in one variable and second-order jets in two.
 *
 * A Jet of order K stores c[i] = f^(i)(t0) / i! for i = 0..K. Arithmetic
 * follows the Cauchy product and the usual recurrences for elementary
 * functions, so every derivative used by the toolkit is exact up to
 * floating-point rounding.
 */

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "legendre/error.hpp"

namespace legendre {

inline constexpr int kDefaultJetOrder = 12;
inline constexpr int kMaxJetOrder = 31;

class Jet {
 public:
  Jet() : Jet(0) {}
  explicit Jet(int order);

  static Jet constant(double c, int order);
  // Jet of the identity map t -> t expanded at t0.
  static Jet variable(double t0, int order);
  static Jet from_coeffs(std::span<const double> coeffs);

  int order() const noexcept { return order_; }
  double value() const noexcept { return c_[0]; }
  std::span<const double> coeffs() const noexcept { return {c_.data(), static_cast<std::size_t>(order_) + 1}; }

  double operator[](int i) const noexcept { return c_[i]; }
  double& operator[](int i) noexcept { return c_[i]; }

  // f^(i)(t0) = i! * c[i]. Throws "jet order exceeded" when i > order().
  double derivative(int i) const;

  // Jet of f' (one order lower; an order-0 jet differentiates to zero).
  Jet differentiated() const;
  // Jet of the antiderivative with value c0 (one order higher).
  Jet integrated(double c0) const;
  Jet truncated(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator/=(const Jet& rhs);
  Jet& operator+=(double rhs) noexcept { c_[0] += rhs; return *this; }
  Jet& operator-=(double rhs) noexcept { c_[0] -= rhs; return *this; }
  Jet& operator*=(double rhs) noexcept;
  Jet& operator/=(double rhs);

 private:
  int order_;
  std::array<double, kMaxJetOrder + 1> c_{};
};

// Binary operations between jets of different orders truncate to the
// smaller order.
Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, double b);
Jet operator+(double a, Jet b);
Jet operator-(Jet a, double b);
Jet operator-(double a, const Jet& b);
Jet operator*(Jet a, double b);
Jet operator*(double a, Jet b);
Jet operator/(Jet a, double b);
Jet operator/(double a, const Jet& b);

Jet pow_int(const Jet& a, int exponent);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
std::pair<Jet, Jet> sin_cos(const Jet& a);
Jet exp(const Jet& a);
Jet sqrt(const Jet& a);
Jet atan(const Jet& a);

// Taylor composition: outer is expanded at inner.value(), the result is the
// jet of outer(inner(.)) at inner's expansion point.
Jet compose(const Jet& outer, const Jet& inner);

inline Jet constant_like(double c, const Jet& like) { return Jet::constant(c, like.order()); }
inline double constant_like(double c, double) { return c; }

double pow_int(double a, int exponent);

// Vanishing test for jet coefficients. Coefficients are compared after
// scaling to a radius rho on which the series is of size `scale`:
// rho = min over j >= 1 of (scale / |c_j|)^(1/j), and c_i vanishes when
// |c_i| rho^i <= max(rel * scale, abs_floor). Without a scale (0), the
// largest coefficient is used with rho = 1.
//
// The scale matters for functions with a small radius of convergence, whose
// high coefficients grow quickly and would otherwise swamp genuine low ones.
struct VanishingThreshold {
  double rel = 1e-9;
  double abs_floor = 1e-12;
  double scale = 0.0;  // typical |f| near the expansion point, e.g. max over the domain
};

bool coefficient_vanishes(const Jet& jet, int index, const VanishingThreshold& threshold = {});

// Smallest index whose coefficient does not vanish, or nullopt if all do.
std::optional<int> leading_index(const Jet& jet, const VanishingThreshold& threshold = {});

/// A scalar function that can be expanded as a Taylor jet at any parameter
/// value. This is the currency passed between curvature, signature and
/// reconstruction code.
class ScalarFunction {
 public:
  using Impl = std::function<Jet(double t0, int order)>;

  ScalarFunction() = default;
  explicit ScalarFunction(Impl impl) : impl_(std::move(impl)) {}

  Jet operator()(double t0, int order) const { return impl_(t0, order); }
  double value(double t0) const { return impl_(t0, 0).value(); }
  explicit operator bool() const noexcept { return static_cast<bool>(impl_); }

 private:
  Impl impl_;
};

// Exact i-th derivative of f at t0; "jet order exceeded" when order > max_order.
double derivative_at(const ScalarFunction& f, double t0, int order, int max_order = kDefaultJetOrder);

// Value, gradient and Hessian of a function of (x, y). The scalar type S is
// double for pointwise partials, or Jet to carry the partials along a curve.
template <class S>
struct BiJet2 {
  S value;
  std::array<S, 2> grad;  // d/dx, d/dy
  std::array<S, 3> hess;  // xx, xy, yy

  static BiJet2 constant(const S& c) {
    S zero = constant_like(0.0, c);
    return {c, {zero, zero}, {zero, zero, zero}};
  }
  static BiJet2 variable_x(const S& x) {
    S zero = constant_like(0.0, x);
    return {x, {constant_like(1.0, x), zero}, {zero, zero, zero}};
  }
  static BiJet2 variable_y(const S& y) {
    S zero = constant_like(0.0, y);
    return {y, {zero, constant_like(1.0, y)}, {zero, zero, zero}};
  }
};

using BiJet2d = BiJet2<double>;

template <class S>
BiJet2<S> constant_like(double c, const BiJet2<S>& like) {
  return BiJet2<S>::constant(constant_like(c, like.value));
}

namespace detail {

// Chain rule for a scalar function with derivatives d1, d2 at a.value.
template <class S>
BiJet2<S> chain(const BiJet2<S>& a, S f0, const S& d1, const S& d2) {
  BiJet2<S> r;
  r.value = std::move(f0);
  r.grad = {d1 * a.grad[0], d1 * a.grad[1]};
  r.hess = {d1 * a.hess[0] + d2 * (a.grad[0] * a.grad[0]),
            d1 * a.hess[1] + d2 * (a.grad[0] * a.grad[1]),
            d1 * a.hess[2] + d2 * (a.grad[1] * a.grad[1])};
  return r;
}

inline void require_nonzero_divisor(double v) {
  if (v == 0.0) throw Error("jet division by zero at expansion point");
}
inline void require_nonzero_divisor(const Jet& v) { require_nonzero_divisor(v.value()); }

inline void require_positive_sqrt(double v) {
  if (!(v > 0.0)) throw Error("sqrt domain error");
}
inline void require_positive_sqrt(const Jet& v) { require_positive_sqrt(v.value()); }

}  // namespace detail

namespace detail {
template <class S>
void require_nonzero_divisor(const BiJet2<S>& v) {
  require_nonzero_divisor(v.value);
}
template <class S>
void require_positive_sqrt(const BiJet2<S>& v) {
  require_positive_sqrt(v.value);
}
}  // namespace detail

template <class S>
BiJet2<S> operator+(const BiJet2<S>& a, const BiJet2<S>& b) {
  return {a.value + b.value,
          {a.grad[0] + b.grad[0], a.grad[1] + b.grad[1]},
          {a.hess[0] + b.hess[0], a.hess[1] + b.hess[1], a.hess[2] + b.hess[2]}};
}

template <class S>
BiJet2<S> operator-(const BiJet2<S>& a, const BiJet2<S>& b) {
  return {a.value - b.value,
          {a.grad[0] - b.grad[0], a.grad[1] - b.grad[1]},
          {a.hess[0] - b.hess[0], a.hess[1] - b.hess[1], a.hess[2] - b.hess[2]}};
}

template <class S>
BiJet2<S> operator-(const BiJet2<S>& a) {
  return {-a.value, {-a.grad[0], -a.grad[1]}, {-a.hess[0], -a.hess[1], -a.hess[2]}};
}

template <class S>
BiJet2<S> operator*(const BiJet2<S>& a, const BiJet2<S>& b) {
  BiJet2<S> r;
  r.value = a.value * b.value;
  r.grad = {a.value * b.grad[0] + b.value * a.grad[0], a.value * b.grad[1] + b.value * a.grad[1]};
  r.hess = {a.value * b.hess[0] + b.value * a.hess[0] + 2.0 * (a.grad[0] * b.grad[0]),
            a.value * b.hess[1] + b.value * a.hess[1] + a.grad[0] * b.grad[1] + a.grad[1] * b.grad[0],
            a.value * b.hess[2] + b.value * a.hess[2] + 2.0 * (a.grad[1] * b.grad[1])};
  return r;
}

template <class S>
BiJet2<S> reciprocal(const BiJet2<S>& b) {
  detail::require_nonzero_divisor(b.value);
  S inv = 1.0 / b.value;
  S inv2 = inv * inv;
  return detail::chain(b, inv, -inv2, 2.0 * (inv2 * inv));
}

template <class S>
BiJet2<S> operator/(const BiJet2<S>& a, const BiJet2<S>& b) {
  return a * reciprocal(b);
}

template <class S>
BiJet2<S> pow_int(const BiJet2<S>& a, int n) {
  if (n == 0) return BiJet2<S>::constant(constant_like(1.0, a.value));
  if (n == 1) return a;
  S p2 = pow_int(a.value, n - 2);
  S p1 = p2 * a.value;
  S p0 = p1 * a.value;
  return detail::chain(a, p0, static_cast<double>(n) * p1, static_cast<double>(n) * (n - 1) * p2);
}

template <class S>
BiJet2<S> sin(const BiJet2<S>& a) {
  using std::cos;
  using std::sin;
  S s = sin(a.value);
  S c = cos(a.value);
  return detail::chain(a, s, c, -s);
}

template <class S>
BiJet2<S> cos(const BiJet2<S>& a) {
  using std::cos;
  using std::sin;
  S s = sin(a.value);
  S c = cos(a.value);
  return detail::chain(a, c, -s, -c);
}

template <class S>
BiJet2<S> exp(const BiJet2<S>& a) {
  using std::exp;
  S e = exp(a.value);
  return detail::chain(a, e, e, e);
}

template <class S>
BiJet2<S> sqrt(const BiJet2<S>& a) {
  using std::sqrt;
  detail::require_positive_sqrt(a.value);
  S r = sqrt(a.value);
  S inv = 1.0 / r;
  return detail::chain(a, r, 0.5 * inv, -0.25 * (inv * inv * inv));
}

template <class S>
BiJet2<S> atan(const BiJet2<S>& a) {
  using std::atan;
  S q = 1.0 / (1.0 + a.value * a.value);
  return detail::chain(a, atan(a.value), q, -2.0 * (a.value * q * q));
}

}  // namespace legendre
