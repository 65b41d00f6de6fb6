#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "quadff/error.hpp"
#include "quadff/parse.hpp"
#include "quadff/poly.hpp"
#include "quadff/sieve.hpp"
#include "quadff/zeta.hpp"

using namespace quadff;

namespace {

Poly P(const char* text, int q) { return parse_poly(text, Field::of_order(q)); }

Poly random_poly(const FieldPtr& f, int max_degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<Code> coef(0, f->order() - 1);
  std::vector<Code> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& v : c) v = coef(rng);
  return Poly(f, c);
}

// q^d with the Moebius sum over divisors, independent of the sieve.
std::int64_t necklace(int q, int d) {
  auto mu = [](int n) {
    int m = 1;
    for (int p = 2; p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    return m;
  };
  std::int64_t s = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    std::int64_t qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    s += mu(d / e) * qe;
  }
  return s / d;
}

Poly from_index(const FieldPtr& f, std::uint64_t idx) {
  std::vector<Code> c;
  for (; idx; idx /= f->order()) c.push_back(static_cast<Code>(idx % f->order()));
  return Poly(f, c);
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("parse") {
    CHECK(P("x^2+x+1", 2).coeffs() == std::vector<Code>{1, 1, 1});
    CHECK(P("2*x^3+x", 3).coeffs() == std::vector<Code>{0, 1, 0, 2});
    CHECK(P("a*x+1", 4).coeffs() == std::vector<Code>{1, 2});
    CHECK(P("-(x+2)(x^2+1)", 3) == P("2*x^3+x^2+2*x+1", 3));
    CHECK(P("x x", 5) == P("x^2", 5));
    CHECK(P("7", 5) == Poly::constant(Field::of_order(5), 2));
    CHECK(P("0", 7).is_zero());
    CHECK(P("(a+1)^2", 4).coeffs() == std::vector<Code>{2});
    CHECK(P("a^3", 8).coeffs() == std::vector<Code>{5});  // a^3 = a^2 + 1
  }

  TEST_CASE("parse errors") {
    auto f3 = Field::of_order(3);
    auto code = [&](const char* t, const FieldPtr& f) {
      try {
        parse_poly(t, f);
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::io_error;
    };
    CHECK(code("x^", f3) == Errc::syntax_error);
    CHECK(code("x+*1", f3) == Errc::syntax_error);
    CHECK(code("(x+1", f3) == Errc::syntax_error);
    CHECK(code("a*x", f3) == Errc::coefficient_out_of_field);
    CHECK(code("y", f3) == Errc::syntax_error);
  }

  TEST_CASE("to_string round-trips") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      auto f = Field::of_order(q);
      for (int i = 0; i < 200; ++i) {
        const Poly p = random_poly(f, 12, rng);
        CHECK(parse_poly(p.to_string(), f) == p);
      }
    }
  }

  TEST_CASE("evaluation") {
    auto f4 = Field::make(2, 1, 2);
    CHECK(eval_poly(P("x^2+x+1", 2), *f4, 2) == 0);
    CHECK(P("x^3+x+1", 2).eval(1) == 1);
    CHECK(P("3*x^4+x+6", 7).eval(0) == 6);
    CHECK_THROWS_AS(eval_poly(P("x", 2), *Field::of_order(3), 1), Error);
    const Element v = eval_poly(P("x^2+x+1", 2), f4->element(3));
    CHECK(v.is_zero());
  }

  TEST_CASE("evaluation in extensions matches polynomial-basis arithmetic") {
    std::mt19937 rng(3);
    for (auto ext : {Field::make(3, 1, 4), Field::make(2, 2, 3), Field::make(3, 2, 2), Field::make(2, 3, 3)}) {
      auto naive = oracle::NaiveField::of(*ext);
      const Poly f = random_poly(ext->base(), 9, rng);
      for (Code x = 0; x < ext->order(); x += 3) CHECK(eval_poly(f, *ext, x) == oracle::eval(*naive, f, x));
    }
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      auto f = Field::of_order(q);
      for (int i = 0; i < 60; ++i) {
        const Poly a = random_poly(f, 20, rng), b = random_poly(f, 20, rng), c = random_poly(f, 20, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) {
          const DivMod dm = divmod(a, b);
          CHECK(dm.quotient * b + dm.remainder == a);
          CHECK(dm.remainder.degree() < b.degree());
        }
      }
    }
  }

  TEST_CASE("gcd is monic and divides both inputs") {
    std::mt19937 rng(5);
    for (int q : {2, 3, 5, 9}) {
      auto f = Field::of_order(q);
      for (int i = 0; i < 100; ++i) {
        const Poly common = random_poly(f, 3, rng);
        const Poly a = random_poly(f, 8, rng) * common, b = random_poly(f, 8, rng) * common;
        const Poly g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
          CHECK(g.is_zero());
          continue;
        }
        CHECK(g.is_monic());
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        if (!common.is_zero()) CHECK(divides(common.monic(), g));
      }
    }
    CHECK_THROWS_AS(divmod(P("x", 3), P("0", 3)), Error);
  }

  TEST_CASE("inverse_mod and powmod") {
    const Poly m = P("x^5+x^2+1", 2);
    for (std::uint64_t i = 1; i < 32; ++i) {
      const Poly a = from_index(Field::of_order(2), i);
      CHECK((a * inverse_mod(a, m)) % m == P("1", 2));
      CHECK(powmod(a, 31, m) == P("1", 2));
    }
    CHECK_THROWS_AS(inverse_mod(P("x+1", 2), P("x^2+1", 2)), Error);
  }

  TEST_CASE("compose_affine") {
    auto f = Field::of_order(5);
    const Poly p = P("x^3+2*x+1", 5);
    const Poly c = compose_affine(p, 2, 3);
    for (Code x = 0; x < 5; ++x) CHECK(c.eval(x) == p.eval(f->add(f->mul(2, x), 3)));
  }

  TEST_CASE("square-free") {
    CHECK(is_squarefree(P("x(x+1)(x+2)", 3)));
    CHECK_FALSE(is_squarefree(P("x^2", 2)));
    CHECK_FALSE(is_squarefree(P("x(x+1)^2(x^2+x+1)", 2)));
    CHECK_FALSE(is_squarefree(P("x^3+1", 3)));  // (x+1)^3, derivative zero
    CHECK(is_squarefree(P("1", 3)));
    CHECK_THROWS_AS(is_squarefree(P("0", 3)), Error);
  }

  TEST_CASE("factor") {
    const Factorization a = factor(P("(x+2)(x^2+1)", 3));
    CHECK(a.unit == 1);
    REQUIRE(a.factors.size() == 2);
    CHECK(a.factors[0].poly == P("x+2", 3));
    CHECK(a.factors[1].poly == P("x^2+1", 3));
    const Factorization b = factor(P("x^3+x", 2));
    REQUIRE(b.factors.size() == 2);
    CHECK(b.factors[0].poly == P("x", 2));
    CHECK(b.factors[1].poly == P("x+1", 2));
    CHECK(b.factors[1].multiplicity == 2);
    const Factorization c = factor(P("x^3+x+1", 2));
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0].poly == P("x^3+x+1", 2));
    CHECK(factor(P("2*x^2+2", 5)).unit == 2);
    CHECK_THROWS_AS(factor(P("0", 5)), Error);
  }

  TEST_CASE("factor round-trips over F_2 up to degree 8") {
    auto f = Field::of_order(2);
    for (std::uint64_t i = 1; i < (1u << 9); ++i) {
      const Poly p = from_index(f, i);
      const Factorization fac = factor(p);
      REQUIRE(fac.product(f) == p);
      for (const auto& x : fac.factors) {
        REQUIRE(x.poly.is_monic());
        REQUIRE(is_irreducible(x.poly));
      }
    }
  }

  TEST_CASE("factor round-trips on random input") {
    std::mt19937 rng(99);
    for (int q : {3, 4, 5, 7, 8, 9}) {
      auto f = Field::of_order(q);
      for (int i = 0; i < 40; ++i) {
        const Poly p = random_poly(f, 10, rng);
        if (p.is_zero()) continue;
        CHECK(factor(p).product(f) == p);
      }
    }
  }

  TEST_CASE("irreducibility agrees with brute-force root search for cubics") {
    for (int q : {2, 3, 4, 5}) {
      auto f = Field::of_order(q);
      const std::uint64_t Q = f->order();
      for (std::uint64_t i = 0; i < Q * Q * Q; ++i) {
        const Poly p = from_index(f, i + Q * Q * Q);  // monic cubic
        bool root = false;
        for (Code x = 0; x < Q; ++x) root = root || p.eval(x) == 0;
        REQUIRE(is_irreducible(p) == !root);
      }
    }
  }

  TEST_CASE("sieve counts") {
    CHECK(count_monic_irreducibles(Field::of_order(2), 2) == 1);
    CHECK(count_monic_irreducibles(Field::of_order(2), 3) == 2);
    CHECK(count_monic_irreducibles(Field::of_order(3), 2) == 3);
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      for (int d = 1; d <= 6; ++d) {
        CAPTURE(q);
        CAPTURE(d);
        CHECK(static_cast<std::int64_t>(count_monic_irreducibles(Field::of_order(q), d)) == necklace(q, d));
      }
    }
    const std::int64_t f2[] = {2, 1, 2, 3, 6, 9};
    for (int d = 1; d <= 6; ++d) {
      CHECK(static_cast<std::int64_t>(count_monic_irreducibles(Field::of_order(2), d)) == f2[d - 1]);
    }
  }

  TEST_CASE("sieve lists are sorted and irreducible") {
    auto sieve = IrreducibleSieve::get(Field::of_order(3), 5);
    for (int d = 1; d <= 5; ++d) {
      const auto& list = sieve->of_degree(d);
      for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] < list[i]);
      for (const Poly& p : list) CHECK(p.is_monic());
    }
  }

  TEST_CASE("places of degree d of the rational function field") {
    CHECK(rational_counts(2, 1) == 3);
    CHECK(rational_counts(2, 2) == 1);
    CHECK(rational_counts(3, 2) == 3);
  }

  TEST_CASE("canonical order") {
    CHECK(P("x+1", 3) < P("x^2", 3));
    CHECK(P("x", 3) < P("x+1", 3));
    CHECK(P("x+2", 3) < P("2*x", 3));
    std::vector<std::uint32_t> k1, k2;
    append_key(P("x+2", 3), k1);
    append_key(P("2*x", 3), k2);
    CHECK(k1 < k2);
  }
}
