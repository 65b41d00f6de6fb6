#include <algorithm>

#include "quadff/curve.hpp"
#include "quadff/error.hpp"
#include "quadff/sieve.hpp"

namespace quadff {

namespace {

void require_char2(const Field& k) {
  if (k.characteristic() != 2) {
    throw Error(Errc::odd_characteristic, "Artin-Schreier forms need characteristic 2, got " + k.name());
  }
}

// Cancels common factors and makes the denominator monic.
void normalize(Poly& num, Poly& den) {
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  const Code lc = den.leading();
  if (lc != 1) {
    const Code inv = den.field().inv(lc);
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

// Square root of c in F_q[x]/(p), p irreducible over F_q (characteristic 2).
Poly residue_sqrt(const Poly& c, const Poly& p) {
  std::uint64_t residue_order = 1;
  for (int i = 0; i < p.degree(); ++i) residue_order *= p.field().order();
  return powmod(c, residue_order / 2, p);
}

}  // namespace

RationalFunction hnf_normalize(const RationalFunction& u) {
  if (u.denominator.is_zero()) throw Error(Errc::division_by_zero, "u has a zero denominator");
  require_char2(u.numerator.field());
  Poly num = u.numerator;
  Poly den = u.denominator;
  normalize(num, den);
  const FieldPtr& field = den.field_ptr();

  // Finite poles of even order.
  bool changed = true;
  while (changed && !num.is_zero()) {
    changed = false;
    for (const Factor& fac : factor(den).factors) {
      if (fac.multiplicity % 2 != 0) continue;
      const Poly& p = fac.poly;
      const Poly half = pow(p, static_cast<unsigned>(fac.multiplicity / 2));
      const Poly rest = den / (half * half);
      const Poly c = (num * inverse_mod(rest, p)) % p;
      const Poly s = residue_sqrt(c, p);
      // u - (s/half)^2 - s/half
      num = num - s * s * rest - s * rest * half;
      normalize(num, den);
      changed = true;
      break;
    }
  }

  // Infinity: even positive deg u.
  while (!num.is_zero() && num.degree() - den.degree() > 0 && (num.degree() - den.degree()) % 2 == 0) {
    const int d = num.degree() - den.degree();
    const Code r = field->sqrt_char2(num.leading());
    const Poly w = Poly::monomial(field, r, d / 2);
    num = num - (w * w + w) * den;
  }
  return {num, den};
}

CharTwoCurve hnf_reduce(const RationalFunction& u) {
  const RationalFunction r = hnf_normalize(u);
  const Field& k = r.denominator.field();
  if (r.numerator.is_zero()) throw Error(Errc::artin_schreier_degenerate, "u reduces to 0");
  const int deg_u = r.numerator.degree() - r.denominator.degree();
  if (r.denominator.degree() == 0 && deg_u == 0) {
    const Code c = r.numerator.leading();
    if (k.absolute_trace(c) == 0) {
      throw Error(Errc::artin_schreier_degenerate, "u reduces to the constant " + k.format(c) + " = w^2 + w");
    }
    throw Error(Errc::out_of_scope_form, "u reduces to the constant " + k.format(c) + " (constant field extension)");
  }
  if (deg_u <= 0) {
    throw Error(Errc::out_of_scope_form, "reduced u = (" + r.numerator.to_string() + ")/(" +
                                             r.denominator.to_string() + ") has deg u = " + std::to_string(deg_u) +
                                             "; the infinite place does not ramify");
  }
  std::vector<PoleFactor> poles;
  for (const Factor& fac : factor(r.denominator).factors) poles.push_back({fac.poly, fac.multiplicity});
  return CharTwoCurve::make(r.numerator, std::move(poles));
}

CharTwoCurve from_char2_equation(const Poly& b, const Poly& c) {
  require_char2(b.field());
  if (b.is_zero()) throw Error(Errc::reduction_invalid_form, "y^2 = C is inseparable over k(x)");
  if (c.is_zero()) throw Error(Errc::artin_schreier_degenerate, "y^2 + B*y = 0 is reducible");
  try {
    return hnf_reduce({c, b * b});
  } catch (const Error& e) {
    if (e.code() == Errc::out_of_scope_form) throw Error(Errc::reduction_invalid_form, e.what());
    throw;
  }
}

}  // namespace quadff
