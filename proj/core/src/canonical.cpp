#include "canonical.hpp"

#include <algorithm>

#include "quadff/error.hpp"
#include "quadff/sieve.hpp"

namespace quadff {

namespace {

CanonicalKey odd_key(Code unit, const Poly& f) {
  CanonicalKey key{0, unit};
  append_key(f, key);
  return key;
}

CanonicalKey char2_key(const CharTwoCurve& c) {
  CanonicalKey key{1, static_cast<std::uint32_t>(c.poles().size())};
  for (const auto& pf : c.poles()) {
    append_key(pf.place, key);
    key.push_back(static_cast<std::uint32_t>(pf.order));
  }
  append_key(c.numerator(), key);
  return key;
}

CanonicalForm odd_form(const OddCharCurve& c) {
  const Field& k = *c.field();
  const Code non_square = k.least_non_square();
  const int m = c.f().degree();
  std::optional<CanonicalForm> best;
  for (Code a = 1; a < k.order(); ++a) {
    const Code am = k.pow(a, static_cast<std::uint64_t>(m));
    const Code unit = k.quadratic_character(k.mul(c.unit(), am)) == 1 ? 1 : non_square;
    for (Code b = 0; b < k.order(); ++b) {
      const Poly f = compose_affine(c.f(), a, b).monic();
      CanonicalKey key = odd_key(unit, f);
      if (!best || key < best->key) best = CanonicalForm{std::move(key), make_odd_curve(c.field(), unit, f)};
    }
  }
  return std::move(*best);
}

// All polynomials of degree <= d, by counting in base q.
class PolyCounter {
 public:
  PolyCounter(const FieldPtr& field, int d) : field_(field), digits_(static_cast<std::size_t>(d) + 1, 0) {}
  Poly current() const { return Poly(field_, digits_); }
  bool next() {
    const Code q = field_->order();
    for (auto& dgt : digits_) {
      if (++dgt < q) return true;
      dgt = 0;
    }
    return false;
  }

 private:
  FieldPtr field_;
  std::vector<Code> digits_;
};

CanonicalForm char2_form(const CharTwoCurve& c, int g, int slack) {
  const FieldPtr& field = c.field();
  const Field& k = *field;
  std::optional<CanonicalForm> best;
  for (Code a = 1; a < k.order(); ++a) {
    for (Code b = 0; b < k.order(); ++b) {
      // u(a x + b) with monic places
      Code scale = 1;
      Poly den = Poly::constant(field, 1);
      Poly half = Poly::constant(field, 1);  // prod p_i^{(order_i - 1)/2}
      for (const auto& pf : c.poles()) {
        const Poly moved = compose_affine(pf.place, a, b);
        scale = k.mul(scale, k.pow(moved.leading(), static_cast<std::uint64_t>(pf.order)));
        const Poly p = moved.monic();
        den *= pow(p, static_cast<unsigned>(pf.order));
        half *= pow(p, static_cast<unsigned>((pf.order - 1) / 2));
      }
      const Poly num = compose_affine(c.numerator(), a, b).scaled(k.inv(scale));
      const Poly den_over_half = den / half;
      const Poly den_over_half2 = den_over_half / half;
      // u + (W/half)^2 + W/half over all W of bounded degree
      PolyCounter counter(field, g + half.degree() + slack);
      do {
        const Poly w = counter.current();
        const Poly shifted = num + w * w * den_over_half2 + w * den_over_half;
        CharTwoCurve reduced = hnf_reduce({shifted, den});
        CanonicalKey key = char2_key(reduced);
        if (!best || key < best->key) best = CanonicalForm{std::move(key), std::move(reduced)};
      } while (counter.next());
    }
  }
  return std::move(*best);
}

// z^n f(r + 1/z), n = deg f
Poly reversed_at(const Poly& f, Code r) {
  std::vector<Code> c = compose_affine(f, 1, r).coeffs();
  std::reverse(c.begin(), c.end());
  return Poly(f.field_ptr(), std::move(c));
}

}  // namespace

std::vector<Curve> infinity_moves(const Curve& curve) {
  std::vector<Curve> out;
  const FieldPtr& field = field_of(curve);
  if (const auto* odd = std::get_if<OddCharCurve>(&curve)) {
    for (const Factor& fac : factor(odd->f()).factors) {
      if (fac.poly.degree() != 1) continue;
      const Code r = field->neg(fac.poly.coeff(0));
      // y -> y z^{g+1}; deg f is odd, so z^{deg f + 1} f(r + 1/z) = z * reversed
      const Poly moved = reversed_at(odd->f(), r) * Poly::x(field);
      out.emplace_back(make_odd_curve(field, odd->unit(), moved));
    }
    return out;
  }
  const auto& c2 = std::get<CharTwoCurve>(curve);
  const Poly num = c2.numerator();
  const Poly den = c2.denominator();
  for (const auto& pf : c2.poles()) {
    if (pf.place.degree() != 1) continue;
    const Code r = field->neg(pf.place.coeff(0));
    Poly n = reversed_at(num, r);
    Poly d = reversed_at(den, r);
    const int excess = num.degree() - den.degree();
    if (excess > 0) d *= Poly::monomial(field, 1, excess);
    if (excess < 0) n *= Poly::monomial(field, 1, -excess);
    out.emplace_back(hnf_reduce({n, d}));
  }
  return out;
}

CanonicalKey canonicalize_moving_infinity(const Curve& curve, int shift_slack) {
  CanonicalKey best = canonicalize(curve, shift_slack);
  for (const Curve& c : infinity_moves(curve)) best = std::min(best, canonicalize(c, shift_slack));
  return best;
}

CanonicalForm canonical_form(const Curve& curve, int shift_slack) {
  if (const auto* odd = std::get_if<OddCharCurve>(&curve)) return odd_form(*odd);
  return char2_form(std::get<CharTwoCurve>(curve), genus(curve), shift_slack);
}

CanonicalKey canonicalize(const Curve& curve, int shift_slack) { return canonical_form(curve, shift_slack).key; }

}  // namespace quadff
