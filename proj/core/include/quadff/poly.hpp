#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "quadff/gf.hpp"

namespace quadff {

/// Dense univariate polynomial over a finite field, coefficients indexed by
/// ascending degree. The leading coefficient is nonzero unless the
/// polynomial is zero, whose degree is kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly constant(FieldPtr field, Code c);
  static Poly monomial(FieldPtr field, Code c, int degree);
  static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Code coeff(int i) const noexcept {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  Code leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Code>& coeffs() const noexcept { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  Poly scaled(Code c) const;
  /// Divides by the leading coefficient; the zero polynomial stays zero.
  Poly monic() const;
  Poly derivative() const;
  /// Evaluation at a point of the polynomial's own field.
  Code eval(Code x) const noexcept;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Degree first, then coefficients from leading to constant term by code.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

  /// ASCII form accepted by parse_poly, e.g. "x^3+2*x+1" or "(a+1)*x^2+a".
  std::string to_string() const;

 private:
  void trim() noexcept;
  void require_same(const Poly& o) const;

  FieldPtr field_;
  std::vector<Code> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Throws Errc::division_by_zero when b is zero.
DivMod divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
inline bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

/// Monic gcd; gcd(0, 0) is zero.
Poly gcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws Errc::division_by_zero when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly pow(const Poly& f, unsigned e);
Poly powmod(Poly base, std::uint64_t e, const Poly& m);
/// f(a*x + b).
Poly compose_affine(const Poly& f, Code a, Code b);

/// Horner evaluation of f (over F_q) at x0 in an extension F_{q^s}.
/// Throws Errc::field_mismatch when the extension is not over f's field.
Code eval_poly(const Poly& f, const Field& extension, Code x0);
Element eval_poly(const Poly& f, const Element& x0);

/// True iff gcd(f, f') is a nonzero constant; f' == 0 with deg f > 0 is a
/// p-th power and therefore not square-free. Throws on the zero polynomial.
bool is_squarefree(const Poly& f);

/// Appends a totally ordered encoding (degree, then coefficients from the
/// leading term down) to out.
void append_key(const Poly& f, std::vector<std::uint32_t>& out);

}  // namespace quadff
