#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "quadff/error.hpp"
#include "quadff/gf.hpp"

using namespace quadff;

namespace {

std::vector<FieldPtr> supported_fields() {
  std::vector<FieldPtr> out;
  for (int p : {2, 3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) {
      for (int s = 1; s <= 10; ++s) {
        if (Field::supported(p, n, s)) out.push_back(Field::make(p, n, s));
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("supported orders") {
    CHECK(Field::of_order(9)->characteristic() == 3);
    CHECK(Field::of_order(8)->base_degree() == 3);
    CHECK(Field::make(2, 1, 1)->modulus().empty());
    CHECK(Field::make(2, 1, 1)->is_prime_field());
    CHECK_THROWS_AS(Field::of_order(6), Error);
    CHECK_THROWS_AS(Field::of_order(11), Error);
    CHECK_THROWS_AS(Field::make(2, 1, 21), Error);
    CHECK_THROWS_AS(Field::make(3, 2, 7), Error);  // 9^7 > 2^20
    try {
      Field::of_order(16);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported_order);
    }
  }

  TEST_CASE("interned") {
    CHECK(Field::make(3, 2, 2) == Field::make(3, 2, 2));
    CHECK(Field::of_order(4) == Field::make(2, 2, 1));
  }

  TEST_CASE("least irreducible moduli") {
    CHECK(Field::make(3, 1, 2)->modulus() == std::vector<Code>{1, 0, 1});  // x^2+1
    CHECK(Field::of_order(4)->prime_modulus() == std::vector<Code>{1, 1, 1});
    CHECK(Field::of_order(8)->prime_modulus() == std::vector<Code>{1, 0, 1, 1});
    CHECK(Field::of_order(9)->prime_modulus() == std::vector<Code>{1, 0, 1});
  }

  TEST_CASE("moduli are monic of degree s and irreducible") {
    for (const auto& f : supported_fields()) {
      if (f->extension_degree() == 1) continue;
      const auto& m = f->modulus();
      REQUIRE(m.size() == static_cast<std::size_t>(f->extension_degree()) + 1);
      CHECK(m.back() == 1);
      // an irreducible factor of degree d <= s/2 would have a root in F_{q^d}
      const int s = f->extension_degree();
      for (int d = 1; 2 * d <= s; ++d) {
        auto sub = Field::make(f->characteristic(), f->base_degree(), d);
        auto naive = oracle::NaiveField::of(*sub);
        const Poly mp(f->base(), m);
        for (Code x = 0; x < sub->order(); ++x) CHECK(oracle::eval(*naive, mp, x) != 0);
      }
    }
  }

  TEST_CASE("a degree-2 modulus over F_4 has no root in F_4") {
    auto f = Field::make(2, 2, 2);
    const auto& m = f->modulus();
    auto k = Field::of_order(4);
    for (Code x = 0; x < 4; ++x) {
      const Code v = k->add(k->add(k->mul(x, x), k->mul(m[1], x)), m[0]);
      CHECK(v != 0);
    }
  }

  TEST_CASE("small facts") {
    auto f4 = Field::of_order(4);
    CHECK(f4->mul(2, 2) == 3);  // a*a = a+1
    auto f3 = Field::of_order(3);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f4->format(3) == "a+1");
    CHECK(f4->name() == "F_4");
  }

  TEST_CASE("tables agree with polynomial-basis arithmetic") {
    std::mt19937 rng(12345);
    for (const auto& f : supported_fields()) {
      auto naive = oracle::NaiveField::of(*f);
      const Code Q = f->order();
      CAPTURE(f->name());
      if (Q <= 256) {
        for (Code a = 0; a < Q; ++a) {
          for (Code b = 0; b < Q; ++b) {
            REQUIRE(f->mul(a, b) == naive->mul(a, b));
            REQUIRE(f->add(a, b) == naive->add(a, b));
          }
        }
      } else {
        std::uniform_int_distribution<Code> pick(0, Q - 1);
        for (int i = 0; i < 20000; ++i) {
          const Code a = pick(rng), b = pick(rng);
          REQUIRE(f->mul(a, b) == naive->mul(a, b));
          REQUIRE(f->add(a, b) == naive->add(a, b));
        }
      }
    }
  }

  TEST_CASE("field axioms, exhaustive up to order 81") {
    for (const auto& f : supported_fields()) {
      const Code Q = f->order();
      if (Q > 81) continue;
      CAPTURE(f->name());
      for (Code a = 0; a < Q; ++a) {
        REQUIRE(f->add(a, f->neg(a)) == 0);
        if (a) REQUIRE(f->mul(a, f->inv(a)) == 1);
        for (Code b = 0; b < Q; ++b) {
          REQUIRE(f->add(a, b) == f->add(b, a));
          REQUIRE(f->mul(a, b) == f->mul(b, a));
          for (Code c = 0; c < Q; ++c) {
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            REQUIRE(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
          }
        }
      }
    }
  }

  TEST_CASE("Lagrange, Frobenius and the inverse") {
    for (const auto& f : supported_fields()) {
      const Code Q = f->order();
      if (Q > 1024) continue;
      const int p = f->characteristic();
      CAPTURE(f->name());
      for (Code a = 1; a < Q; ++a) {
        REQUIRE(f->pow(a, Q - 1) == 1);
        REQUIRE(f->mul(a, f->inv(a)) == 1);
      }
      for (Code a = 0; a < Q; a += 7) {
        for (Code b = 0; b < Q; b += 5) {
          REQUIRE(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
        }
      }
    }
    CHECK_THROWS_AS(Field::of_order(5)->inv(0), Error);
  }

  TEST_CASE("primitive element generates the multiplicative group") {
    for (const auto& f : supported_fields()) {
      if (f->order() > 4096) continue;
      std::set<Code> seen;
      Code x = 1;
      for (Code i = 0; i + 1 < f->order(); ++i, x = f->mul(x, f->primitive_element())) seen.insert(x);
      CHECK(seen.size() == f->order() - 1);
    }
  }

  TEST_CASE("quadratic character matches the set of squares") {
    for (int q : {3, 5, 7, 9}) {
      auto f = Field::of_order(q);
      std::set<Code> squares;
      for (Code y = 1; y < f->order(); ++y) squares.insert(f->mul(y, y));
      for (Code a = 1; a < f->order(); ++a) CHECK(f->quadratic_character(a) == (squares.count(a) ? 1 : -1));
      CHECK(f->quadratic_character(0) == 0);
      CHECK(f->quadratic_character(f->least_non_square()) == -1);
      for (Code a = 1; a < f->least_non_square(); ++a) CHECK(squares.count(a) == 1);
    }
  }

  TEST_CASE("absolute trace and square roots in characteristic 2") {
    for (auto f : {Field::of_order(2), Field::of_order(4), Field::of_order(8), Field::make(2, 1, 10),
                   Field::make(2, 2, 5), Field::make(2, 3, 4)}) {
      auto naive = oracle::NaiveField::of(*f);
      int bits = 0;
      for (Code q = f->order(); q > 1; q >>= 1) ++bits;
      for (Code a = 0; a < f->order(); a += (f->order() > 256 ? 97 : 1)) {
        Code t = 0, x = a;
        for (int i = 0; i < bits; ++i, x = naive->mul(x, x)) t = naive->add(t, x);
        REQUIRE(t <= 1);
        REQUIRE(f->absolute_trace(a) == static_cast<int>(t));
        const Code r = f->sqrt_char2(a);
        REQUIRE(f->mul(r, r) == a);
      }
    }
  }

  TEST_CASE("coordinates round-trip and embedding keeps codes") {
    auto ext = Field::make(3, 2, 3);
    for (Code a = 0; a < ext->order(); a += 11) CHECK(ext->from_coordinates(ext->coordinates(a)) == a);
    auto k = Field::of_order(9);
    for (Code c = 0; c < 9; ++c) CHECK(embed(k->element(c), *ext).code() == c);
  }

  TEST_CASE("elements") {
    auto f = Field::of_order(7);
    CHECK(f->elements().size() == 7);
    const Element a = f->element(3), b = f->element(5);
    CHECK((a + b).code() == 1);
    CHECK((a * b).code() == 1);
    CHECK((a / b * b) == a);
    CHECK((-a).code() == 4);
    CHECK(a.pow(6) == f->one());
    CHECK_THROWS_AS((void)(a + Field::of_order(5)->one()), Error);
    CHECK_THROWS_AS(f->zero().inv(), Error);
  }
}
