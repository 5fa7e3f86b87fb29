#pragma once

/**
 * @file signature.hpp
 * @brief Zero sets of the curvature pair, their contact orders and the
 * interleaving ("sequence order") of inflection and singular points.
 *
 * Two Legendre curves with finitely many zeros are curvature equivalent
 * exactly when their signatures agree: same numbers of zeros of ell and of
 * beta, the same interleaving, and the same contact order at corresponding
 * zeros. For open curves the interleaving may be read backwards (t -> -t);
 * for closed curves it may in addition be shifted cyclically.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "legendre/curve.hpp"
#include "legendre/taylor.hpp"
#include "legendre/vec2.hpp"

namespace legendre {

struct ZeroSearchOptions {
  int grid_n = 4096;
  double tol = 1e-9;       // relative to max |f| over the grid
  bool periodic = false;   // identify a root at the right end with the left end
  int max_order = kDefaultJetOrder;
};

struct LocatedZero {
  double t;
  std::optional<int> order;  // nullopt: every jet coefficient up to max_order vanishes
};

// Values and first derivatives of f on the uniform grid of grid_n intervals.
struct GridSamples {
  std::vector<double> value;
  std::vector<double> slope;
};

GridSamples sample_grid(const ScalarFunction& f, Interval domain, int grid_n);

// Zeros with their contact orders. Sign changes of f are bracketed and
// refined; sign changes of f' where |f| is tiny catch even-order zeros.
// Throws when more than grid_n / 4 zeros turn up.
std::vector<LocatedZero> locate_zeros(const ScalarFunction& f, Interval domain, const ZeroSearchOptions& options = {},
                                      const GridSamples* presampled = nullptr);

std::vector<double> find_zeros(const ScalarFunction& f, Interval domain, int grid_n = 4096, double tol = 1e-9,
                               bool periodic = false);

// Smallest r >= 1 whose jet coefficient at t0 does not vanish; nullopt when
// all coefficients up to max_order vanish. Throws "not a zero point" when
// f(t0) itself does not vanish. `scale` is the typical size of |f| (see
// VanishingThreshold); 0 compares against the largest coefficient.
std::optional<int> contact_order(const ScalarFunction& f, double t0, int max_order = kDefaultJetOrder,
                                 double scale = 0.0);

enum class ZeroKind { inflection, singular, both };

struct ZeroPoint {
  double t;
  ZeroKind kind;
  std::optional<int> ord_ell;
  std::optional<int> ord_beta;
};

bool same_type(const ZeroPoint& a, const ZeroPoint& b);

struct Signature {
  Interval domain;
  bool closed = false;
  bool ell_identically_zero = false;
  std::vector<ZeroPoint> zeros;  // ascending in t

  int ell_zero_count() const;
  int beta_zero_count() const;
};

struct SignatureOptions {
  int grid_n = 4096;
  double coincidence_tol = 1e-8;
  int max_order = kDefaultJetOrder;
};

Signature signature(const LegendreCurve& curve, const SignatureOptions& options = {});

enum class Matching { identity, reversal, cyclic_shift, cyclic_shift_with_reversal, none };

std::string to_string(Matching m);
std::string to_string(ZeroKind k);

struct EquivalenceVerdict {
  bool equivalent = false;
  Matching matching = Matching::none;
  int shift = 0;  // l for the cyclic matchings
  std::string reason;
};

EquivalenceVerdict decide_equivalence(const Signature& a, const Signature& b);

struct ParityReport {
  int ell_odd_count = 0;
  int beta_odd_count = 0;
  bool ok = false;
};

ParityReport parity_check(const Signature& sig);

struct SharedZero {
  double t;
  int order;
};

struct Cofactor {
  std::vector<double> ts;
  std::vector<double> lambda;
  double min_abs = 0.0;
};

// Samples lambda = f / g, extended across the shared zeros by the ratio of
// the leading Taylor coefficients. Throws "cofactor hypothesis violated" if
// the zero data does not match or lambda would vanish.
Cofactor cofactor(const ScalarFunction& f, const ScalarFunction& g, Interval domain,
                  std::span<const SharedZero> shared_zeros, int samples = 1024);

// Contact orders of (ell, beta) at a single parameter, with 0 meaning the
// function does not vanish there.
struct LocalSignature {
  bool ell_zero_function = false;
  int ord_ell = 0;
  int ord_beta = 0;

  friend bool operator==(const LocalSignature&, const LocalSignature&) = default;
};

LocalSignature local_signature(const LegendreCurve& curve, double t0, const SignatureOptions& options = {});

}  // namespace legendre
