#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadff/poly.hpp"

namespace quadff {

/// y^2 = c * f(x) over F_q, q odd, with f monic, square-free, of odd degree
/// 2g+1 >= 3. The infinite place of k(x) ramifies.
class OddCharCurve {
 public:
  const FieldPtr& field() const noexcept { return f_.field_ptr(); }
  Code unit() const noexcept { return unit_; }
  const Poly& f() const noexcept { return f_; }
  /// c * f
  Poly rhs() const { return f_.scaled(unit_); }

  friend bool operator==(const OddCharCurve&, const OddCharCurve&) = default;

 private:
  friend OddCharCurve make_odd_curve(const FieldPtr& field, Code c, const Poly& f);
  OddCharCurve(Code unit, Poly f) : unit_(unit), f_(std::move(f)) {}

  Code unit_;
  Poly f_;
};

/// A finite pole p(x)^order of u in Hasse normal form.
struct PoleFactor {
  Poly place;  // monic irreducible
  int order;   // odd, positive

  friend bool operator==(const PoleFactor&, const PoleFactor&) = default;
};

/// y^2 + y = u over F_q, q in {2, 4, 8}, with u = numerator / prod p_i^{order_i}
/// in Hasse normal form: distinct monic irreducible p_i, odd orders, the
/// numerator coprime to every p_i, and deg u positive and odd so that the
/// infinite place ramifies.
class CharTwoCurve {
 public:
  /// Validates every invariant above; throws Errc::out_of_scope_form
  /// (deg u not positive odd), Errc::reduction_invalid_form (other
  /// violations) or Errc::odd_characteristic.
  static CharTwoCurve make(Poly numerator, std::vector<PoleFactor> poles);

  const FieldPtr& field() const noexcept { return numerator_.field_ptr(); }
  const Poly& numerator() const noexcept { return numerator_; }
  const std::vector<PoleFactor>& poles() const noexcept { return poles_; }
  /// prod p_i^{order_i}
  Poly denominator() const;
  /// deg numerator - deg denominator
  int deg_u() const noexcept { return deg_u_; }

  friend bool operator==(const CharTwoCurve&, const CharTwoCurve&) = default;

 private:
  CharTwoCurve(Poly numerator, std::vector<PoleFactor> poles, int deg_u)
      : numerator_(std::move(numerator)), poles_(std::move(poles)), deg_u_(deg_u) {}

  Poly numerator_;
  std::vector<PoleFactor> poles_;  // sorted by place
  int deg_u_;
};

using Curve = std::variant<OddCharCurve, CharTwoCurve>;

/// u = numerator / denominator, an element of k(x).
struct RationalFunction {
  Poly numerator;
  Poly denominator;
};

/// Ramified places of k(x). The infinite place is always present and
/// contributes degree 1; finite places contribute their degree.
struct RamificationData {
  std::vector<int> place_degrees;  // finite places sorted ascending, then the infinite place
  int t = 0;

  /// Sorted multiset of all degrees, including the infinite place.
  std::vector<int> degree_multiset() const;
};

/// Folds a non-monic f into the unit. Throws Errc::even_characteristic,
/// Errc::division_by_zero (c == 0), Errc::not_square_free,
/// Errc::even_degree or Errc::out_of_scope_form (deg f == 1).
OddCharCurve make_odd_curve(const FieldPtr& field, Code c, const Poly& f);

/// Hasse normal form of y^2 + y = u: removes even-order pole parts at finite
/// places and at infinity by subtracting w^2 + w. Throws
/// Errc::artin_schreier_degenerate when u lies in {w^2 + w} and
/// Errc::out_of_scope_form when the infinite place does not ramify.
CharTwoCurve hnf_reduce(const RationalFunction& u);

/// The reduction step of hnf_reduce without the scope checks: returns u
/// with coprime numerator and monic denominator, every finite pole of odd
/// order, and deg u odd or <= 0. Throws Errc::division_by_zero.
RationalFunction hnf_normalize(const RationalFunction& u);

/// y^2 + B y = C, i.e. u = C / B^2, reduced to Hasse normal form. Throws
/// Errc::reduction_invalid_form when the reduced form has deg u <= 0.
CharTwoCurve from_char2_equation(const Poly& b, const Poly& c);

int genus(const Curve& curve);
RamificationData ramified_places(const Curve& curve);
const FieldPtr& field_of(const Curve& curve);

/// Curve text:
///   odd characteristic:  an equation in x and y of degree 2 in y, e.g.
///                        "y^2 = 2*(x+2)*(x^2+1)" or "y^2 - x(x^2+2) = 0"
///   characteristic 2:    "y^2 + (<poly>)*y = <poly>" (any arrangement of the
///                        same equation), or "u = (<poly>)/(<poly>)"
Curve parse_curve(std::string_view text, const FieldPtr& field);

/// Equation accepted by parse_curve. Odd: "y^2 = c*f_1*...*f_r" with the
/// irreducible factors of f. Char 2: "y^2 + B*y = C" with
/// B = prod p_i^{(order_i+1)/2} and C = numerator * prod p_i, so u = C/B^2.
std::string equation_text(const Curve& curve);

/// u as a rational function (char 2 only).
RationalFunction as_rational(const CharTwoCurve& curve);

}  // namespace quadff
