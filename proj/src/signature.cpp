#include "legendre/signature.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace legendre {

namespace {

constexpr double kIdenticallyZero = 1e-10;
constexpr double kDedupTol = 1e-9;

int sign_of(double v) { return (v > 0) - (v < 0); }

template <class F>
double bisect(const F& g, double lo, double hi, double glo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (sign_of(gm) == sign_of(glo)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Newton on f^(r-1) for r = 1, 2, ... starting near a candidate. The
// candidate is accepted with the largest r for which the refined point shows
// exactly r vanishing jet coefficients. Lower r converge only linearly on a
// multiple zero and would misreport the order; f^(m-1) has a simple zero.
std::optional<LocatedZero> refine(const ScalarFunction& f, double candidate, double window, Interval domain,
                                  int max_order, const VanishingThreshold& threshold) {
  std::optional<LocatedZero> best;
  double t = candidate;
  for (int r = 1; r <= max_order; ++r) {
    bool failed = false;
    for (int it = 0; it < 100; ++it) {
      const Jet j = f(t, r);
      const double num = j[r - 1];
      const double den = r * j[r];
      if (num == 0.0) break;
      if (den == 0.0) {
        failed = true;
        break;
      }
      const double next = std::clamp(t - num / den, domain.lo, domain.hi);
      if (std::abs(next - candidate) > window) {
        failed = true;
        break;
      }
      const bool done = std::abs(next - t) <= 1e-15 * (1.0 + std::abs(t));
      t = next;
      if (done) break;
    }
    if (failed) break;
    const std::optional<int> lead = leading_index(f(t, max_order), threshold);
    if (!lead) {
      best = LocatedZero{t, std::nullopt};
      break;
    }
    if (*lead == r) {
      best = LocatedZero{t, r};
    } else if (*lead < r) {
      break;
    }
  }
  return best;
}

GridSamples sample_both(const LegendreCurve& curve, int n, GridSamples& beta) {
  GridSamples ell;
  ell.value.resize(n + 1);
  ell.slope.resize(n + 1);
  beta.value.resize(n + 1);
  beta.slope.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    auto [l, b] = curvature_jets(curve, curve.domain().node(i, n), 1);
    ell.value[i] = l[0];
    ell.slope[i] = l[1];
    beta.value[i] = b[0];
    beta.slope[i] = b[1];
  }
  return ell;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

GridSamples sample_grid(const ScalarFunction& f, Interval domain, int grid_n) {
  GridSamples s;
  s.value.resize(grid_n + 1);
  s.slope.resize(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) {
    const Jet j = f(domain.node(i, grid_n), 1);
    s.value[i] = j[0];
    s.slope[i] = j[1];
  }
  return s;
}

std::vector<LocatedZero> locate_zeros(const ScalarFunction& f, Interval domain, const ZeroSearchOptions& options,
                                      const GridSamples* presampled) {
  const int n = options.grid_n;
  if (n < 64) throw Error("zero search needs a grid of at least 64 intervals");
  GridSamples own;
  if (!presampled) {
    own = sample_grid(f, domain, n);
    presampled = &own;
  }
  const std::vector<double>& v = presampled->value;
  const std::vector<double>& d = presampled->slope;
  const double h = domain.length() / n;
  const double scale = max_abs(v);
  const double threshold = options.tol * scale;

  std::vector<double> candidates;
  auto value_at = [&f](double t) { return f.value(t); };
  auto slope_at = [&f](double t) { return f(t, 1)[1]; };

  for (int i = 0; i <= n; ++i) {
    if (v[i] == 0.0) candidates.push_back(domain.node(i, n));
  }
  for (int i = 0; i < n; ++i) {
    const double lo = domain.node(i, n);
    const double hi = domain.node(i + 1, n);
    if (v[i] * v[i + 1] < 0.0) candidates.push_back(bisect(value_at, lo, hi, v[i]));
    if (d[i] * d[i + 1] < 0.0) {
      const double tc = bisect(slope_at, lo, hi, d[i]);
      if (std::abs(f.value(tc)) <= threshold) candidates.push_back(tc);
    }
  }
  for (int i = 0; i <= n; ++i) {
    const bool endpoint = i == 0 || i == n;
    if ((endpoint || d[i] == 0.0) && v[i] != 0.0 && std::abs(v[i]) <= threshold) {
      candidates.push_back(domain.node(i, n));
    }
  }

  std::vector<LocatedZero> zeros;
  for (double c : candidates) {
    if (auto z = refine(f, c, h, domain, options.max_order, {.scale = scale})) {
      if (options.periodic && std::abs(z->t - domain.hi) <= kDedupTol) z->t = domain.lo;
      zeros.push_back(*z);
    }
  }
  std::sort(zeros.begin(), zeros.end(), [](const LocatedZero& a, const LocatedZero& b) { return a.t < b.t; });
  std::vector<LocatedZero> unique;
  for (const LocatedZero& z : zeros) {
    if (!unique.empty() && z.t - unique.back().t <= kDedupTol) continue;
    unique.push_back(z);
  }
  if (static_cast<int>(unique.size()) > n / 4) {
    throw Error("zero set appears non-finite; refine or reject");
  }
  return unique;
}

std::vector<double> find_zeros(const ScalarFunction& f, Interval domain, int grid_n, double tol, bool periodic) {
  ZeroSearchOptions options;
  options.grid_n = grid_n;
  options.tol = tol;
  options.periodic = periodic;
  std::vector<double> ts;
  for (const LocatedZero& z : locate_zeros(f, domain, options)) ts.push_back(z.t);
  return ts;
}

std::optional<int> contact_order(const ScalarFunction& f, double t0, int max_order, double scale) {
  const Jet j = f(t0, max_order);
  const VanishingThreshold threshold{.scale = scale};
  if (!coefficient_vanishes(j, 0, threshold)) throw Error(fmt::format("not a zero point (t={:.17g})", t0));
  return leading_index(j, threshold);
}

bool same_type(const ZeroPoint& a, const ZeroPoint& b) {
  return a.kind == b.kind && a.ord_ell == b.ord_ell && a.ord_beta == b.ord_beta;
}

int Signature::ell_zero_count() const {
  return static_cast<int>(std::count_if(zeros.begin(), zeros.end(), [](const ZeroPoint& z) { return z.ord_ell.has_value(); }));
}

int Signature::beta_zero_count() const {
  return static_cast<int>(std::count_if(zeros.begin(), zeros.end(), [](const ZeroPoint& z) { return z.ord_beta.has_value(); }));
}

Signature signature(const LegendreCurve& curve, const SignatureOptions& options) {
  const Interval domain = curve.domain();
  const int n = options.grid_n;
  GridSamples beta_grid;
  const GridSamples ell_grid = sample_both(curve, n, beta_grid);
  const double length = domain.length();

  if (max_abs(beta_grid.value) * length <= kIdenticallyZero) throw Error("degenerate: constant curve");

  Signature sig;
  sig.domain = domain;
  sig.closed = curve.closed();
  sig.ell_identically_zero = max_abs(ell_grid.value) * length <= kIdenticallyZero;

  const CurvaturePair k = curvature_pair(curve);
  ZeroSearchOptions zopts;
  zopts.grid_n = n;
  zopts.periodic = curve.closed();
  zopts.max_order = options.max_order;

  auto require_order = [](const LocatedZero& z) {
    if (!z.order) throw Error(fmt::format("contact order exceeds jet order (t={:.17g})", z.t));
    return *z.order;
  };

  std::vector<LocatedZero> ell_zeros;
  if (!sig.ell_identically_zero) ell_zeros = locate_zeros(k.ell, domain, zopts, &ell_grid);
  const std::vector<LocatedZero> beta_zeros = locate_zeros(k.beta, domain, zopts, &beta_grid);

  for (const LocatedZero& z : beta_zeros) {
    sig.zeros.push_back({z.t, ZeroKind::singular, std::nullopt, require_order(z)});
  }
  for (const LocatedZero& z : ell_zeros) {
    const int ord = require_order(z);
    auto match = std::find_if(sig.zeros.begin(), sig.zeros.end(), [&](const ZeroPoint& p) {
      return p.kind == ZeroKind::singular && std::abs(p.t - z.t) <= options.coincidence_tol;
    });
    if (match != sig.zeros.end()) {
      match->kind = ZeroKind::both;
      match->ord_ell = ord;
    } else {
      sig.zeros.push_back({z.t, ZeroKind::inflection, ord, std::nullopt});
    }
  }
  std::sort(sig.zeros.begin(), sig.zeros.end(), [](const ZeroPoint& a, const ZeroPoint& b) { return a.t < b.t; });
  return sig;
}

std::string to_string(Matching m) {
  switch (m) {
    case Matching::identity: return "identity";
    case Matching::reversal: return "reversal";
    case Matching::cyclic_shift: return "cyclic-shift";
    case Matching::cyclic_shift_with_reversal: return "cyclic-shift-with-reversal";
    case Matching::none: return "none";
  }
  return "none";
}

std::string to_string(ZeroKind k) {
  switch (k) {
    case ZeroKind::inflection: return "inflection";
    case ZeroKind::singular: return "singular";
    case ZeroKind::both: return "both";
  }
  return "?";
}

namespace {

std::string describe(const ZeroPoint& z) {
  auto ord = [](const std::optional<int>& o) { return o ? std::to_string(*o) : std::string("-"); };
  return fmt::format("{}(ord_ell={}, ord_beta={})", to_string(z.kind), ord(z.ord_ell), ord(z.ord_beta));
}

// First index k where a[k] differs from b[index(k)], or -1.
template <class Index>
int first_mismatch(const std::vector<ZeroPoint>& a, const std::vector<ZeroPoint>& b, Index index) {
  for (int k = 0; k < static_cast<int>(a.size()); ++k) {
    if (!same_type(a[k], b[index(k)])) return k;
  }
  return -1;
}

}  // namespace

EquivalenceVerdict decide_equivalence(const Signature& a, const Signature& b) {
  EquivalenceVerdict verdict;
  if (a.closed != b.closed) {
    verdict.reason = "closed flags differ";
    return verdict;
  }
  if (a.ell_identically_zero != b.ell_identically_zero) {
    verdict.reason = "ell_identically_zero flags differ";
    return verdict;
  }
  if (a.ell_zero_count() != b.ell_zero_count() || a.beta_zero_count() != b.beta_zero_count()) {
    verdict.reason = "zero counts differ";
    return verdict;
  }
  const int n = static_cast<int>(a.zeros.size());
  if (static_cast<int>(b.zeros.size()) != n) {
    verdict.reason = "zero counts differ";
    return verdict;
  }

  auto accept = [&](Matching m, int shift, std::string reason) {
    verdict.equivalent = true;
    verdict.matching = m;
    verdict.shift = shift;
    verdict.reason = std::move(reason);
    return verdict;
  };

  const int identity_mismatch = first_mismatch(a.zeros, b.zeros, [](int k) { return k; });
  if (identity_mismatch < 0) return accept(Matching::identity, 0, "zero sequences agree in order");
  if (first_mismatch(a.zeros, b.zeros, [n](int k) { return n - 1 - k; }) < 0) {
    return accept(Matching::reversal, 0, "zero sequences agree after reversing the parameter");
  }
  if (a.closed) {
    for (int l = 1; l < n; ++l) {
      if (first_mismatch(a.zeros, b.zeros, [n, l](int k) { return (k + l) % n; }) < 0) {
        return accept(Matching::cyclic_shift, l, fmt::format("zero sequences agree after a cyclic shift by {}", l));
      }
    }
    for (int l = 1; l < n; ++l) {
      if (first_mismatch(a.zeros, b.zeros, [n, l](int k) { return (n - 1 - k + l) % n; }) < 0) {
        return accept(Matching::cyclic_shift_with_reversal, l,
                      fmt::format("zero sequences agree after reversal and a cyclic shift by {}", l));
      }
    }
  }
  verdict.reason = fmt::format("no admissible matching of the zero sequences; first mismatch at position {}: {} vs {}",
                               identity_mismatch, describe(a.zeros[identity_mismatch]),
                               describe(b.zeros[identity_mismatch]));
  return verdict;
}

ParityReport parity_check(const Signature& sig) {
  if (!sig.closed) throw Error("parity check requires a closed curve");
  ParityReport report;
  for (const ZeroPoint& z : sig.zeros) {
    if (z.ord_ell && *z.ord_ell % 2 == 1) ++report.ell_odd_count;
    if (z.ord_beta && *z.ord_beta % 2 == 1) ++report.beta_odd_count;
  }
  report.ok = report.ell_odd_count % 2 == 0 && report.beta_odd_count % 2 == 0;
  return report;
}

Cofactor cofactor(const ScalarFunction& f, const ScalarFunction& g, Interval domain,
                  std::span<const SharedZero> shared_zeros, int samples) {
  if (samples < 2) throw Error("cofactor needs at least 2 samples");
  const int max_order = kDefaultJetOrder;
  double f_scale = 0.0;
  double g_scale = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = domain.node(i, samples);
    f_scale = std::max(f_scale, std::abs(f.value(t)));
    g_scale = std::max(g_scale, std::abs(g.value(t)));
  }
  for (const SharedZero& z : shared_zeros) {
    std::optional<int> of;
    std::optional<int> og;
    try {
      of = contact_order(f, z.t, max_order, f_scale);
      og = contact_order(g, z.t, max_order, g_scale);
    } catch (const Error&) {
      throw Error("cofactor hypothesis violated");
    }
    if (!of || !og || *of != z.order || *og != z.order) throw Error("cofactor hypothesis violated");
  }

  // Near a shared zero, lambda is the ratio of the Taylor series of f and g
  // with the common factor (t - t_i)^r removed.
  const double near = 1e-3 * domain.length();
  Cofactor out;
  for (int i = 0; i <= samples; ++i) {
    const double t = domain.node(i, samples);
    const SharedZero* zero = nullptr;
    for (const SharedZero& z : shared_zeros) {
      if (std::abs(t - z.t) < near) zero = &z;
    }
    double lambda;
    if (zero) {
      const Jet fj = f(zero->t, max_order);
      const Jet gj = g(zero->t, max_order);
      const double s = t - zero->t;
      double num = 0.0;
      double den = 0.0;
      for (int j = max_order; j >= zero->order; --j) {
        num = num * s + fj[j];
        den = den * s + gj[j];
      }
      if (den == 0.0) throw Error("cofactor hypothesis violated");
      lambda = num / den;
    } else {
      const double gv = g.value(t);
      if (gv == 0.0) throw Error("cofactor hypothesis violated");
      lambda = f.value(t) / gv;
    }
    out.ts.push_back(t);
    out.lambda.push_back(lambda);
  }

  double largest = 0.0;
  out.min_abs = std::abs(out.lambda.front());
  for (std::size_t i = 0; i < out.lambda.size(); ++i) {
    largest = std::max(largest, std::abs(out.lambda[i]));
    out.min_abs = std::min(out.min_abs, std::abs(out.lambda[i]));
    if (i > 0 && sign_of(out.lambda[i]) != sign_of(out.lambda[i - 1])) {
      throw Error("cofactor hypothesis violated");
    }
  }
  if (!(out.min_abs > 1e-9 * largest)) throw Error("cofactor hypothesis violated");
  return out;
}

LocalSignature local_signature(const LegendreCurve& curve, double t0, const SignatureOptions& options) {
  const int n = options.grid_n;
  GridSamples beta_grid;
  const GridSamples ell_grid = sample_both(curve, n, beta_grid);
  const double length = curve.domain().length();
  if (max_abs(beta_grid.value) * length <= kIdenticallyZero) throw Error("degenerate: constant curve");

  LocalSignature local;
  local.ell_zero_function = max_abs(ell_grid.value) * length <= kIdenticallyZero;
  auto [ell, beta] = curvature_jets(curve, t0, options.max_order);
  auto order_of = [t0](const Jet& j, double scale) {
    const VanishingThreshold threshold{.scale = scale};
    if (!coefficient_vanishes(j, 0, threshold)) return 0;
    const std::optional<int> lead = leading_index(j, threshold);
    if (!lead) throw Error(fmt::format("contact order exceeds jet order (t={:.17g})", t0));
    return *lead;
  };
  if (!local.ell_zero_function) local.ord_ell = order_of(ell, max_abs(ell_grid.value));
  local.ord_beta = order_of(beta, max_abs(beta_grid.value));
  return local;
}

}  // namespace legendre
