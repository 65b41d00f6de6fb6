#pragma once

#include <string_view>
#include <vector>

#include "quadff/poly.hpp"

namespace quadff {

/// A polynomial in y with coefficients in F_q[x]; by_y[k] multiplies y^k.
struct BiPoly {
  std::vector<Poly> by_y;

  int y_degree() const noexcept { return static_cast<int>(by_y.size()) - 1; }
  /// Coefficient of y^k (zero polynomial when absent).
  Poly coeff(int k, const FieldPtr& field) const;
};

/// Parses a polynomial in x. Grammar (whitespace ignored):
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (['*'] unary)*        -- juxtaposition multiplies
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' nat)?
///   primary := nat | 'x' | 'a' | '(' expr ')'
///
/// Integers are reduced mod p. `a` is the generator of F_q over F_p and is
/// only valid when q is not prime. Throws Errc::syntax_error (with the
/// character position) or Errc::coefficient_out_of_field.
Poly parse_poly(std::string_view text, const FieldPtr& field);

/// Same grammar with the additional primary 'y'.
BiPoly parse_bivariate(std::string_view text, const FieldPtr& field);

/// expr ('/' expr)? at top level; the denominator defaults to 1.
struct ParsedRatio {
  Poly numerator;
  Poly denominator;
};
ParsedRatio parse_ratio(std::string_view text, const FieldPtr& field);

}  // namespace quadff
