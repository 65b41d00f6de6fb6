#include "quadff/zeta.hpp"

#include <limits>

#include "quadff/error.hpp"
#include "quadff/sieve.hpp"

namespace quadff {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::overflow, std::string(what) + " exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t ipow(std::int64_t b, int e) {
  i128 r = 1;
  for (int i = 0; i < e; ++i) r = r * b;
  return narrow(r, "q^e");
}

FieldPtr extension(const Field& k, int s) {
  if (s < 1) throw Error(Errc::invalid_argument, "extension degree must be positive");
  if (!Field::supported(k.characteristic(), k.base_degree(), s)) {
    throw Error(Errc::extension_too_large, "F_" + std::to_string(k.order()) + "^" + std::to_string(s) +
                                               " exceeds the supported field sizes");
  }
  return Field::make(k.characteristic(), k.base_degree(), s);
}

std::int64_t count_odd(const OddCharCurve& c, const Field& ext) {
  std::int64_t sum = 0;
  const Code unit = c.unit();
  const Code order = ext.order();
  for (Code x = 0; x < order; ++x) sum += ext.quadratic_character(ext.mul(unit, eval_poly(c.f(), ext, x)));
  return 1 + static_cast<std::int64_t>(order) + sum;
}

std::int64_t count_char2(const CharTwoCurve& c, const Field& ext) {
  const Poly den = c.denominator();
  std::int64_t total = 1;
  const Code order = ext.order();
  for (Code x = 0; x < order; ++x) {
    const Code d = eval_poly(den, ext, x);
    if (d == 0) {
      ++total;
      continue;
    }
    const Code v = ext.div(eval_poly(c.numerator(), ext, x), d);
    if (ext.absolute_trace(v) == 0) total += 2;
  }
  return total;
}

}  // namespace

std::int64_t ZetaReport::L(std::int64_t t) const {
  i128 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
  return narrow(acc, "L(t)");
}

int moebius(int n) noexcept {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t count_np(const Curve& curve, int s) {
  const FieldPtr ext = extension(*field_of(curve), s);
  if (const auto* odd = std::get_if<OddCharCurve>(&curve)) return count_odd(*odd, *ext);
  return count_char2(std::get<CharTwoCurve>(curve), *ext);
}

std::vector<std::int64_t> place_counts(std::span<const std::int64_t> np) {
  std::vector<std::int64_t> out;
  for (int r = 1; r <= static_cast<int>(np.size()); ++r) {
    std::int64_t sum = 0;
    for (int d = 1; d <= r; ++d) {
      if (r % d == 0) sum += moebius(r / d) * np[d - 1];
    }
    if (sum % r != 0 || sum < 0) {
      throw Error(Errc::non_integral, "N_" + std::to_string(r) + " = " + std::to_string(sum) + "/" +
                                          std::to_string(r) + " is not a nonnegative integer");
    }
    out.push_back(sum / r);
  }
  return out;
}

std::int64_t rational_counts(int q, int d) {
  if (d < 1) throw Error(Errc::invalid_argument, "degree must be positive");
  if (d == 1) return q + 1;
  std::int64_t sum = 0;
  for (int f = 1; f <= d; ++f) {
    if (d % f == 0) sum += moebius(d / f) * ipow(q, f);
  }
  return sum / d;
}

ZetaReport l_polynomial_from_counts(int q, std::span<const std::int64_t> N) {
  const int g = static_cast<int>(N.size());
  if (g < 1) throw Error(Errc::invalid_argument, "genus must be at least 1");
  ZetaReport r;
  r.q = q;
  r.g = g;
  r.N.assign(N.begin(), N.end());
  for (int d = 1; d <= g; ++d) r.n.push_back(rational_counts(q, d));
  for (int s = 1; s <= g; ++s) {
    std::int64_t np = 0;
    for (int d = 1; d <= s; ++d) {
      if (s % d == 0) np += d * r.N[d - 1];
    }
    r.np.push_back(np);
  }
  for (int nu = 1; nu <= g; ++nu) {
    std::int64_t s = 0;
    for (int d = 1; d <= nu; ++d) {
      if (nu % d == 0) s -= d * (r.N[d - 1] - r.n[d - 1]);
    }
    r.S.push_back(s);
  }
  r.a.assign(2 * g + 1, 0);
  r.a[0] = 1;
  for (int k = 1; k <= g; ++k) {
    i128 acc = 0;
    for (int i = 1; i <= k; ++i) acc -= static_cast<i128>(r.S[i - 1]) * r.a[k - i];
    if (acc % k != 0) {
      throw Error(Errc::non_integral, "Newton step a_" + std::to_string(k) + " is not integral");
    }
    r.a[k] = narrow(acc / k, "a_k");
  }
  for (int j = 0; j < g; ++j) r.a[2 * g - j] = narrow(static_cast<i128>(ipow(q, g - j)) * r.a[j], "a_k");
  r.h = r.L(1);
  return r;
}

ZetaReport l_polynomial(const Curve& curve) {
  const int g = genus(curve);
  if (g < 1) throw Error(Errc::invalid_argument, "genus must be at least 1");
  std::vector<std::int64_t> np;
  for (int s = 1; s <= g; ++s) np.push_back(count_np(curve, s));
  const auto N = place_counts(np);
  return l_polynomial_from_counts(static_cast<int>(field_of(curve)->order()), N);
}

std::int64_t closed_form_h(int q, int g, std::span<const std::int64_t> N) {
  if (g < 1 || g > 5) throw Error(Errc::invalid_argument, "closed forms cover genus 1..5");
  if (static_cast<int>(N.size()) < g) throw Error(Errc::invalid_argument, "need N_1..N_g");
  const i128 Q = q;
  const i128 N1 = N[0];
  const i128 N2 = g >= 2 ? N[1] : 0;
  const i128 N3 = g >= 3 ? N[2] : 0;
  const i128 N4 = g >= 4 ? N[3] : 0;
  const i128 N5 = g >= 5 ? N[4] : 0;
  i128 num = 0;
  i128 den = 1;
  switch (g) {
    case 1:
      num = N1;
      break;
    case 2:
      num = N1 - 2 * Q + 2 * N2 + N1 * N1;
      den = 2;
      break;
    case 3:
      num = 3 * N1 * N1 - 6 * N1 * Q + 2 * N1 + 6 * N3 + N1 * N1 * N1 + 6 * N2 * N1;
      den = 6;
      break;
    case 4:
      num = 6 * N1 + 11 * N1 * N1 - 12 * N1 * Q + 12 * N2 + 12 * N2 * N1 - 24 * N2 * Q - 12 * N1 * N1 * Q +
            24 * N4 + 6 * N1 * N1 * N1 + 24 * N3 * N1 + 12 * N2 * N2 + 12 * N2 * N1 * N1 + N1 * N1 * N1 * N1;
      den = 24;
      break;
    case 5:
      num = -120 * N2 * N1 * Q - 40 * N1 * Q + 24 * N1 + 50 * N1 * N1 + 100 * N2 * N1 - 60 * N1 * N1 * Q +
            35 * N1 * N1 * N1 + 60 * N1 * N3 - 120 * N3 * Q + 60 * N2 * N1 * N1 - 20 * N1 * N1 * N1 * Q +
            10 * N1 * N1 * N1 * N1 + 120 * N4 * N1 + 120 * N3 * N2 + 60 * N3 * N1 * N1 + 60 * N2 * N2 * N1 +
            20 * N2 * N1 * N1 * N1 + 120 * N5 + N1 * N1 * N1 * N1 * N1;
      den = 120;
      break;
  }
  if (num % den != 0) throw Error(Errc::non_integral, "closed-form h is not integral");
  return narrow(num / den, "h");
}

bool hasse_weil_holds(const ZetaReport& r) {
  const i128 d = static_cast<i128>(r.N.at(0)) - r.q - 1;
  return d * d <= static_cast<i128>(4) * r.g * r.g * r.q;
}

bool class_number_lower_bound_holds(const ZetaReport& r) {
  // (sqrt(q) - 1)^{2g} = A + B sqrt(q) with integers A, B.
  i128 A = 1, B = 0;
  for (int i = 0; i < 2 * r.g; ++i) {
    const i128 nA = -A + B * r.q;
    const i128 nB = A - B;
    A = nA;
    B = nB;
  }
  // h >= A + B sqrt(q)  <=>  h - A >= B sqrt(q)
  const i128 lhs = static_cast<i128>(r.h) - A;
  if (B <= 0) return lhs >= 0 || lhs * lhs <= B * B * r.q;
  return lhs >= 0 && lhs * lhs >= B * B * r.q;
}

std::vector<std::string> zeta_property_failures(const ZetaReport& r) {
  std::vector<std::string> out;
  if (r.L(0) != 1) out.emplace_back("L(0)");
  if (r.a.at(2 * r.g) != ipow(r.q, r.g)) out.emplace_back("a_2g");
  for (int j = 0; j <= r.g; ++j) {
    if (static_cast<i128>(r.a[2 * r.g - j]) != static_cast<i128>(ipow(r.q, r.g - j)) * r.a[j]) {
      out.emplace_back("functional-equation");
      break;
    }
  }
  if (r.h < 1) out.emplace_back("class-number-positive");
  if (!hasse_weil_holds(r)) out.emplace_back("hasse-weil");
  if (!class_number_lower_bound_holds(r)) out.emplace_back("lower-bound");
  try {
    if (!rh_check(r)) out.emplace_back("riemann-hypothesis");
  } catch (const Error&) {
    out.emplace_back("riemann-hypothesis");
  }
  if (r.g <= 5) {
    try {
      if (closed_form_h(r.q, r.g, r.N) != r.h) out.emplace_back("closed-form-h");
    } catch (const Error&) {
      out.emplace_back("closed-form-h");
    }
  }
  return out;
}

}  // namespace quadff
