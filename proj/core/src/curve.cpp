#include "quadff/curve.hpp"

#include <algorithm>

#include "quadff/error.hpp"
#include "quadff/parse.hpp"
#include "quadff/sieve.hpp"

namespace quadff {

namespace {

void require_base_field(const Field& k) {
  if (k.extension_degree() != 1) {
    throw Error(Errc::field_mismatch, "curves are defined over F_q, not " + k.name());
  }
}

std::string factor_text(const Poly& p) {
  const std::string s = p.to_string();
  if (p.degree() == 1 && p.coeff(0) == 0 && p.leading() == 1) return s;
  return "(" + s + ")";
}

std::string power_text(const Poly& p, int e) {
  std::string s = factor_text(p);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

OddCharCurve make_odd_curve(const FieldPtr& field, Code c, const Poly& f) {
  const Field& k = *field;
  require_base_field(k);
  if (k.characteristic() == 2) throw Error(Errc::even_characteristic, "y^2 = c*f(x) needs odd q, got " + k.name());
  if (c == 0) throw Error(Errc::division_by_zero, "unit c must be nonzero");
  if (f.field_ptr() != field) throw Error(Errc::mixed_field, "f is not over " + k.name());
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "f is zero");
  if (!is_squarefree(f)) throw Error(Errc::not_square_free, f.to_string() + " is not square-free");
  if (f.degree() % 2 == 0) {
    throw Error(Errc::even_degree, "deg f = " + std::to_string(f.degree()) + " is even; the infinite place does not ramify");
  }
  if (f.degree() < 3) throw Error(Errc::out_of_scope_form, "deg f = 1 gives genus 0");
  return OddCharCurve(k.mul(c, f.leading()), f.monic());
}

CharTwoCurve CharTwoCurve::make(Poly numerator, std::vector<PoleFactor> poles) {
  const Field& k = numerator.field();
  require_base_field(k);
  if (k.characteristic() != 2) throw Error(Errc::odd_characteristic, "Hasse normal form needs characteristic 2");
  if (numerator.is_zero()) throw Error(Errc::reduction_invalid_form, "numerator is zero");
  std::sort(poles.begin(), poles.end(), [](const PoleFactor& a, const PoleFactor& b) { return a.place < b.place; });
  int deg_u = numerator.degree();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const PoleFactor& pf = poles[i];
    if (pf.place.field_ptr() != numerator.field_ptr()) throw Error(Errc::mixed_field, "pole not over " + k.name());
    if (!pf.place.is_monic() || !is_irreducible(pf.place)) {
      throw Error(Errc::reduction_invalid_form, pf.place.to_string() + " is not monic irreducible");
    }
    if (i > 0 && poles[i - 1].place == pf.place) {
      throw Error(Errc::reduction_invalid_form, "repeated pole " + pf.place.to_string());
    }
    if (pf.order <= 0 || pf.order % 2 == 0) {
      throw Error(Errc::reduction_invalid_form, "pole order " + std::to_string(pf.order) + " at " +
                                                    pf.place.to_string() + " is not odd positive");
    }
    if (divides(pf.place, numerator)) {
      throw Error(Errc::reduction_invalid_form, "numerator is divisible by " + pf.place.to_string());
    }
    deg_u -= pf.order * pf.place.degree();
  }
  if (deg_u <= 0 || deg_u % 2 == 0) {
    throw Error(Errc::out_of_scope_form, "deg u = " + std::to_string(deg_u) + " is not positive and odd");
  }
  return CharTwoCurve(std::move(numerator), std::move(poles), deg_u);
}

Poly CharTwoCurve::denominator() const {
  Poly d = Poly::constant(field(), 1);
  for (const auto& pf : poles_) d *= pow(pf.place, static_cast<unsigned>(pf.order));
  return d;
}

RationalFunction as_rational(const CharTwoCurve& curve) { return {curve.numerator(), curve.denominator()}; }

std::vector<int> RamificationData::degree_multiset() const {
  std::vector<int> out = place_degrees;
  std::sort(out.begin(), out.end());
  return out;
}

const FieldPtr& field_of(const Curve& curve) {
  return std::visit([](const auto& c) -> const FieldPtr& { return c.field(); }, curve);
}

int genus(const Curve& curve) {
  if (const auto* odd = std::get_if<OddCharCurve>(&curve)) return (odd->f().degree() - 1) / 2;
  const auto& c2 = std::get<CharTwoCurve>(curve);
  int twice = c2.deg_u() + 1;
  for (const auto& pf : c2.poles()) twice += (pf.order + 1) * pf.place.degree();
  if (twice % 2 != 0) throw Error(Errc::non_integral, "odd genus numerator " + std::to_string(twice));
  return twice / 2 - 1;
}

RamificationData ramified_places(const Curve& curve) {
  RamificationData out;
  if (const auto* odd = std::get_if<OddCharCurve>(&curve)) {
    for (const Factor& f : factor(odd->f()).factors) out.place_degrees.push_back(f.poly.degree());
  } else {
    for (const auto& pf : std::get<CharTwoCurve>(curve).poles()) out.place_degrees.push_back(pf.place.degree());
  }
  std::sort(out.place_degrees.begin(), out.place_degrees.end());
  out.place_degrees.push_back(1);
  out.t = static_cast<int>(out.place_degrees.size());
  return out;
}

Curve parse_curve(std::string_view text, const FieldPtr& field) {
  const Field& k = *field;
  require_base_field(k);
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) {
    throw Error(Errc::syntax_error, "expected exactly one '=' in \"" + std::string(text) + "\"");
  }
  std::string_view lhs = text.substr(0, eq);
  const std::string_view rhs = text.substr(eq + 1);
  while (!lhs.empty() && lhs.front() == ' ') lhs.remove_prefix(1);
  while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);

  if (lhs == "u") {
    if (k.characteristic() != 2) throw Error(Errc::odd_characteristic, "the u = N/D form is for characteristic 2");
    const ParsedRatio r = parse_ratio(rhs, field);
    return hnf_reduce({r.numerator, r.denominator});
  }

  const BiPoly left = parse_bivariate(lhs, field);
  const BiPoly right = parse_bivariate(rhs, field);
  std::vector<Poly> e(3, Poly(field));
  const int top = std::max(left.y_degree(), right.y_degree());
  if (top != 2) throw Error(Errc::syntax_error, "equation must have degree 2 in y: \"" + std::string(text) + "\"");
  for (int i = 0; i <= 2; ++i) e[i] = left.coeff(i, field) - right.coeff(i, field);
  if (e[2].degree() != 0) throw Error(Errc::syntax_error, "coefficient of y^2 must be a nonzero constant");
  const Code inv = k.inv(e[2].leading());
  const Poly b = e[1].scaled(inv);
  const Poly c = e[0].scaled(inv);

  // y^2 + b*y + c = 0
  if (k.characteristic() == 2) return from_char2_equation(b, c);
  const Code inv4 = k.inv(k.add(k.add(1, 1), k.add(1, 1)));
  const Poly rhs_poly = (b * b).scaled(inv4) - c;
  if (rhs_poly.is_zero()) throw Error(Errc::zero_polynomial, "right-hand side is zero");
  return make_odd_curve(field, 1, rhs_poly);
}

std::string equation_text(const Curve& curve) {
  if (const auto* odd = std::get_if<OddCharCurve>(&curve)) {
    std::vector<std::string> parts;
    if (odd->unit() != 1) parts.push_back(odd->field()->format(odd->unit()));
    for (const Factor& f : factor(odd->f()).factors) parts.push_back(factor_text(f.poly));
    std::string rhs = join(parts);
    return "y^2 = " + rhs;
  }
  const auto& c2 = std::get<CharTwoCurve>(curve);
  std::vector<std::string> b_parts;
  std::vector<std::string> c_parts;
  for (const auto& pf : c2.poles()) {
    b_parts.push_back(power_text(pf.place, (pf.order + 1) / 2));
    c_parts.push_back(factor_text(pf.place));
  }
  c_parts.push_back(factor_text(c2.numerator()));
  const std::string b = b_parts.empty() ? "y" : join(b_parts) + "*y";
  return "y^2 + " + b + " = " + join(c_parts);
}

}  // namespace quadff
