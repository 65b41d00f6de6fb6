#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "quadff/poly.hpp"

namespace quadff {

/// All monic irreducible polynomials over a field up to some degree, built by
/// induction on degree: a monic polynomial of degree d is reducible iff it is
/// a product of a monic irreducible of degree k <= d/2 and a monic cofactor.
/// Within a degree, polynomials are listed in the canonical Poly order.
class IrreducibleSieve {
 public:
  /// Shared, cached sieve covering at least max_degree.
  static std::shared_ptr<const IrreducibleSieve> get(const FieldPtr& field, int max_degree);

  IrreducibleSieve(FieldPtr field, int max_degree);

  int max_degree() const noexcept { return static_cast<int>(by_degree_.size()) - 1; }
  const std::vector<Poly>& of_degree(int d) const;
  std::size_t count(int d) const { return of_degree(d).size(); }
  const FieldPtr& field() const noexcept { return field_; }

 private:
  FieldPtr field_;
  std::vector<std::vector<Poly>> by_degree_;  // index 0 unused
};

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity;
};

struct Factorization {
  Code unit;
  std::vector<Factor> factors;  // sorted by canonical Poly order

  /// unit * prod factor^multiplicity.
  Poly product(const FieldPtr& field) const;
};

/// Complete factorization by trial division against the sieve.
/// Throws Errc::zero_polynomial.
Factorization factor(const Poly& f);

/// Not divisible by any monic irreducible of at most half its degree.
bool is_irreducible(const Poly& f);

/// Number of monic irreducibles of degree d, read off the sieve.
std::uint64_t count_monic_irreducibles(const FieldPtr& field, int d);

}  // namespace quadff
