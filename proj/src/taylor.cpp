#include "legendre/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace legendre {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw Error("jet order " + std::to_string(order) + " outside [0, " + std::to_string(kMaxJetOrder) + "]");
  }
}

}  // namespace

Jet::Jet(int order) : order_(order) { check_order(order); }

Jet Jet::constant(double c, int order) {
  Jet j(order);
  j.c_[0] = c;
  return j;
}

Jet Jet::variable(double t0, int order) {
  Jet j(order);
  j.c_[0] = t0;
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet Jet::from_coeffs(std::span<const double> coeffs) {
  if (coeffs.empty()) throw Error("jet needs at least one coefficient");
  Jet j(static_cast<int>(coeffs.size()) - 1);
  std::copy(coeffs.begin(), coeffs.end(), j.c_.begin());
  return j;
}

double Jet::derivative(int i) const {
  if (i < 0 || i > order_) throw Error("jet order exceeded");
  double factorial = 1.0;
  for (int k = 2; k <= i; ++k) factorial *= k;
  return factorial * c_[i];
}

Jet Jet::differentiated() const {
  if (order_ == 0) return Jet(0);
  Jet d(order_ - 1);
  for (int i = 0; i < order_; ++i) d.c_[i] = (i + 1) * c_[i + 1];
  return d;
}

Jet Jet::integrated(double c0) const {
  Jet r(order_ + 1);
  r.c_[0] = c0;
  for (int i = 0; i <= order_; ++i) r.c_[i + 1] = c_[i] / (i + 1);
  return r;
}

Jet Jet::truncated(int order) const {
  Jet r(std::min(order, order_));
  std::copy_n(c_.begin(), r.order_ + 1, r.c_.begin());
  return r;
}

Jet Jet::operator-() const {
  Jet r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
  return r;
}

Jet& Jet::operator+=(const Jet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += rhs.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  order_ = std::min(order_, rhs.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
  *this = *this * rhs;
  return *this;
}

Jet& Jet::operator/=(const Jet& rhs) {
  *this = *this / rhs;
  return *this;
}

Jet& Jet::operator*=(double rhs) noexcept {
  for (int i = 0; i <= order_; ++i) c_[i] *= rhs;
  return *this;
}

Jet& Jet::operator/=(double rhs) {
  if (rhs == 0.0) throw Error("jet division by zero at expansion point");
  for (int i = 0; i <= order_; ++i) c_[i] /= rhs;
  return *this;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r = a;
  r += b;
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r = a;
  r -= b;
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  const int k = std::min(a.order(), b.order());
  Jet r(k);
  for (int n = 0; n <= k; ++n) {
    double s = 0.0;
    for (int i = 0; i <= n; ++i) s += a[i] * b[n - i];
    r[n] = s;
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.value() == 0.0) throw Error("jet division by zero at expansion point");
  const int k = std::min(a.order(), b.order());
  Jet q(k);
  for (int n = 0; n <= k; ++n) {
    double s = a[n];
    for (int i = 1; i <= n; ++i) s -= b[i] * q[n - i];
    q[n] = s / b[0];
  }
  return q;
}

Jet operator+(Jet a, double b) { return a += b; }
Jet operator+(double a, Jet b) { return b += a; }
Jet operator-(Jet a, double b) { return a -= b; }
Jet operator-(double a, const Jet& b) { return (-b) += a; }
Jet operator*(Jet a, double b) { return a *= b; }
Jet operator*(double a, Jet b) { return b *= a; }
Jet operator/(Jet a, double b) { return a /= b; }
Jet operator/(double a, const Jet& b) { return Jet::constant(a, b.order()) / b; }

Jet pow_int(const Jet& a, int exponent) {
  if (exponent < 0) throw Error("pow_int needs a non-negative exponent");
  Jet result = Jet::constant(1.0, a.order());
  Jet base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

double pow_int(double a, int exponent) {
  if (exponent < 0) throw Error("pow_int needs a non-negative exponent");
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= a;
    exponent >>= 1;
    if (exponent > 0) a *= a;
  }
  return result;
}

std::pair<Jet, Jet> sin_cos(const Jet& a) {
  const int k = a.order();
  Jet s(k);
  Jet c(k);
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (int n = 1; n <= k; ++n) {
    double ss = 0.0;
    double cc = 0.0;
    for (int i = 1; i <= n; ++i) {
      ss += i * a[i] * c[n - i];
      cc += i * a[i] * s[n - i];
    }
    s[n] = ss / n;
    c[n] = -cc / n;
  }
  return {s, c};
}

Jet sin(const Jet& a) { return sin_cos(a).first; }
Jet cos(const Jet& a) { return sin_cos(a).second; }

Jet exp(const Jet& a) {
  const int k = a.order();
  Jet e(k);
  e[0] = std::exp(a[0]);
  for (int n = 1; n <= k; ++n) {
    double s = 0.0;
    for (int i = 1; i <= n; ++i) s += i * a[i] * e[n - i];
    e[n] = s / n;
  }
  return e;
}

Jet sqrt(const Jet& a) {
  if (!(a[0] > 0.0)) throw Error("sqrt domain error");
  const int k = a.order();
  Jet r(k);
  r[0] = std::sqrt(a[0]);
  for (int n = 1; n <= k; ++n) {
    double s = a[n];
    for (int i = 1; i < n; ++i) s -= r[i] * r[n - i];
    r[n] = s / (2.0 * r[0]);
  }
  return r;
}

Jet atan(const Jet& a) {
  if (a.order() == 0) return Jet::constant(std::atan(a[0]), 0);
  // (atan a)' = a' / (1 + a^2)
  Jet low = a.truncated(a.order() - 1);
  Jet slope = a.differentiated() / (1.0 + low * low);
  return slope.integrated(std::atan(a[0]));
}

Jet compose(const Jet& outer, const Jet& inner) {
  const int k = std::min(outer.order(), inner.order());
  Jet shift = inner.truncated(k);
  shift[0] = 0.0;
  Jet result = Jet::constant(outer[k], k);
  for (int i = k - 1; i >= 0; --i) {
    result = result * shift;
    result[0] += outer[i];
  }
  return result;
}

namespace {

// Scaled magnitudes |c_i| rho^i and the cut-off below which they vanish.
std::pair<std::array<double, kMaxJetOrder + 1>, double> scaled_coefficients(const Jet& jet,
                                                                           const VanishingThreshold& threshold) {
  std::array<double, kMaxJetOrder + 1> a{};
  double reference = 0.0;
  if (threshold.scale > 0.0) {
    double rho = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= jet.order(); ++j) {
      if (jet[j] != 0.0) rho = std::min(rho, std::pow(threshold.scale / std::abs(jet[j]), 1.0 / j));
    }
    reference = std::max(threshold.scale, std::abs(jet[0]));
    double power = 1.0;
    for (int j = 0; j <= jet.order(); ++j) {
      a[j] = jet[j] == 0.0 ? 0.0 : std::abs(jet[j]) * power;
      if (std::isfinite(rho)) power *= rho;
    }
  } else {
    for (int j = 0; j <= jet.order(); ++j) {
      a[j] = std::abs(jet[j]);
      reference = std::max(reference, a[j]);
    }
  }
  return {a, std::max(threshold.rel * reference, threshold.abs_floor)};
}

}  // namespace

bool coefficient_vanishes(const Jet& jet, int index, const VanishingThreshold& threshold) {
  auto [a, limit] = scaled_coefficients(jet, threshold);
  return a[index] <= limit;
}

std::optional<int> leading_index(const Jet& jet, const VanishingThreshold& threshold) {
  auto [a, limit] = scaled_coefficients(jet, threshold);
  for (int i = 0; i <= jet.order(); ++i) {
    if (a[i] > limit) return i;
  }
  return std::nullopt;
}

double derivative_at(const ScalarFunction& f, double t0, int order, int max_order) {
  if (order < 0 || order > max_order) throw Error("jet order exceeded");
  return f(t0, order).derivative(order);
}

}  // namespace legendre
