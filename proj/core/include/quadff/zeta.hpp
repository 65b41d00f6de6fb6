#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quadff/curve.hpp"

namespace quadff {

/// Zeta data of a curve of genus g over F_q. Sequences np, N, n, S are
/// indexed 1..g at positions 0..g-1; a holds a_0..a_{2g}.
struct ZetaReport {
  int q = 0;
  int g = 0;
  std::vector<std::int64_t> np;
  std::vector<std::int64_t> N;
  std::vector<std::int64_t> n;
  std::vector<std::int64_t> S;
  std::vector<std::int64_t> a;
  std::int64_t h = 0;

  /// L(t) evaluated at an integer.
  std::int64_t L(std::int64_t t) const;
};

/// Degree-one places of K over F_{q^s}, the ramified infinite place included.
/// Throws Errc::extension_too_large when F_{q^s} is not constructible.
std::int64_t count_np(const Curve& curve, int s);

/// Moebius inversion r*N_r = sum_{d|r} mu(r/d) np_d. Throws
/// Errc::non_integral on an inexact division or a negative count.
std::vector<std::int64_t> place_counts(std::span<const std::int64_t> np);

/// Places of degree d of k(x): q+1 for d = 1, monic irreducibles otherwise.
std::int64_t rational_counts(int q, int d);

int moebius(int n) noexcept;

/// Full report from np_1..np_g. Throws Errc::invalid_argument for g < 1.
ZetaReport l_polynomial(const Curve& curve);
/// Same, from place counts N_1..N_g (g = N.size()). Throws Errc::non_integral
/// when a Newton division is inexact, Errc::overflow past 64 bits.
ZetaReport l_polynomial_from_counts(int q, std::span<const std::int64_t> N);

/// Closed-form class number for g = 1..5 in terms of q and N_1..N_g.
/// Throws Errc::invalid_argument outside that range, Errc::non_integral when
/// the final division is inexact.
std::int64_t closed_form_h(int q, int g, std::span<const std::int64_t> N);

/// True iff every root of L(t) has modulus q^{-1/2} within tolerance.
/// Throws Errc::root_finder_nonconvergence.
bool rh_check(int q, std::span<const std::int64_t> a, double tolerance = 1e-8);
inline bool rh_check(const ZetaReport& r) { return rh_check(r.q, r.a); }

/// (N_1 - q - 1)^2 <= 4 g^2 q.
bool hasse_weil_holds(const ZetaReport& r);
/// h >= (sqrt(q) - 1)^{2g}, decided exactly.
bool class_number_lower_bound_holds(const ZetaReport& r);
/// Names of the violated invariants: "L(0)", "a_2g", "functional-equation",
/// "class-number-positive", "hasse-weil", "riemann-hypothesis",
/// "lower-bound", "closed-form-h".
/// Newton divisions are checked when the report is built.
std::vector<std::string> zeta_property_failures(const ZetaReport& r);

}  // namespace quadff
