#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "quadff/error.hpp"
#include "quadff/parse.hpp"
#include "quadff/search.hpp"
#include "quadff/zeta.hpp"

using namespace quadff;

namespace {

Curve C(const char* text, int q) { return parse_curve(text, Field::of_order(q)); }

OddCharCurve odd_image(const OddCharCurve& c, Code a, Code b, Code lambda) {
  const auto& k = c.field();
  return make_odd_curve(k, k->mul(c.unit(), k->mul(lambda, lambda)), compose_affine(c.f(), a, b));
}

// (unit, monic f) orbit representative by brute force over x -> a x + b, y -> lambda y.
std::pair<Code, std::vector<Code>> odd_orbit_min(const OddCharCurve& c) {
  const auto& k = c.field();
  std::pair<Code, std::vector<Code>> best{~Code{0}, {}};
  for (Code a = 1; a < k->order(); ++a) {
    for (Code b = 0; b < k->order(); ++b) {
      for (Code l = 1; l < k->order(); ++l) {
        const OddCharCurve m = odd_image(c, a, b, l);
        std::vector<Code> coeffs(m.f().coeffs().rbegin(), m.f().coeffs().rend());
        std::pair<Code, std::vector<Code>> cand{m.unit(), coeffs};
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

Poly rand_poly(const FieldPtr& k, int deg, std::mt19937& rng) {
  std::vector<Code> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = static_cast<Code>(rng() % k->order());
  return Poly(k, c);
}

// u + w^2 + w with w = n / d, where d^2 divides the denominator of u.
CharTwoCurve shifted(const CharTwoCurve& c, const Poly& n, const Poly& d) {
  const RationalFunction u = as_rational(c);
  const Poly num = u.numerator * d * d + (n * n + n * d) * u.denominator;
  return hnf_reduce({num, u.denominator * d * d});
}

CharTwoCurve char2_affine(const CharTwoCurve& c, Code a, Code b) {
  const RationalFunction u = as_rational(c);
  return hnf_reduce({compose_affine(u.numerator, a, b), compose_affine(u.denominator, a, b)});
}

std::string temp_dir(const char* tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("quadff_test_" + std::string(tag));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("small searches") {
    const SearchResult a = search(2, 1, 2);
    REQUIRE(a.classes.size() == 1);
    CHECK(a.classes[0].h == 2);
    CHECK(a.classes[0].exponent_two);
    const SearchResult b = search(3, 2, 8);
    REQUIRE(b.classes.size() == 1);
    CHECK(b.classes[0].N[0] == 4);
    CHECK(b.classes[0].t == 5);
    CHECK(b.stats.zeta_failures == 0);
    CHECK(b.stats.record_failures == 0);
    CHECK(std::is_sorted(b.keys.begin(), b.keys.end()));
  }

  TEST_CASE("infeasible and unsupported") {
    try {
      search(2, 7, 4);
      FAIL("expected infeasible_pair");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::infeasible_pair);
    }
    try {
      enumerate_candidates(2, 1, 6);
      FAIL("expected unsupported_h");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported_h);
    }
  }

  TEST_CASE("candidates have the requested genus and ramification count") {
    for (auto [q, g, h] : {std::tuple{2, 2, 2}, {3, 2, 4}, {5, 1, 2}, {4, 2, 4}, {2, 4, 8}}) {
      CAPTURE(q);
      CAPTURE(g);
      CAPTURE(h);
      const auto cands = enumerate_candidates(q, g, h);
      CHECK(!cands.empty());
      for (const Curve& c : cands) {
        REQUIRE(genus(c) == g);
        REQUIRE(expected_h(q, ramified_places(c).t) == h);
      }
    }
  }

  TEST_CASE("odd candidate count matches a direct enumeration") {
    // q = 5, g = 1, t = 3: f = (linear)(monic quadratic irreducible), unit in {1, 2}
    const auto cands = enumerate_candidates(5, 1, 2);
    std::size_t direct = 0;
    auto k = Field::of_order(5);
    for (Code c0 = 0; c0 < 5; ++c0) {
      for (Code c1 = 0; c1 < 5; ++c1) {
        for (Code c2 = 0; c2 < 5; ++c2) {
          const Poly f(k, {c0, c1, c2, 1});
          if (!is_squarefree(f)) continue;
          if (ramified_places(Curve{make_odd_curve(k, 1, f)}).t == 3) direct += 1;
        }
      }
    }
    std::size_t listed = 0;
    for (const Curve& c : cands) listed += std::get<OddCharCurve>(c).unit() == 1;
    CHECK(listed == direct);
  }

  TEST_CASE("odd classes match brute-force orbits") {
    for (auto [q, g, h] : {std::tuple{3, 1, 4}, {3, 2, 4}, {5, 1, 2}, {5, 1, 4}, {7, 1, 4}, {3, 2, 2}}) {
      CAPTURE(q);
      CAPTURE(g);
      std::set<std::pair<Code, std::vector<Code>>> orbits;
      for (const Curve& c : enumerate_candidates(q, g, h)) {
        if (l_polynomial(c).h != h) continue;
        orbits.insert(odd_orbit_min(std::get<OddCharCurve>(c)));
      }
      CHECK(search(q, g, h).classes.size() == orbits.size());
    }
  }

  TEST_CASE("canonical key is invariant under odd substitutions") {
    std::mt19937 rng(4);
    const Curve e12 = C("y^2 = 2*x*(x+1)*(x^3+x^2+x+2)", 3);
    const CanonicalKey key = canonicalize(e12);
    const auto& odd = std::get<OddCharCurve>(e12);
    for (Code a = 1; a < 3; ++a) {
      for (Code b = 0; b < 3; ++b) {
        for (Code l = 1; l < 3; ++l) CHECK(canonicalize(odd_image(odd, a, b, l)) == key);
      }
    }
    const Curve other = C("y^2 = x*(x+1)*(x^3+x^2+x+2)", 3);
    if (l_polynomial(other).N != l_polynomial(e12).N) CHECK(canonicalize(other) != key);
    const Curve c9 = C("y^2 = x^3 + a*x + 1", 9);
    const auto& o9 = std::get<OddCharCurve>(c9);
    for (int i = 0; i < 20; ++i) {
      const Code a = 1 + rng() % 8, b = rng() % 9, l = 1 + rng() % 8;
      CHECK(canonicalize(odd_image(o9, a, b, l)) == canonicalize(c9));
    }
  }

  TEST_CASE("canonical key is invariant under characteristic-2 substitutions and shifts") {
    std::mt19937 rng(8);
    for (auto [q, eq] : {std::pair{2, "y^2 + x*(x+1)*y + x*(x+1)*(x^3+x+1) = 0"},
                         {2, "y^2 + x*y + x*(x^2+x+1) = 0"},
                         {2, "y^2 + (x^3+x+1)*y = (x^3+x+1)*(x^4+x^3+x^2+x+1)"},
                         {4, "y^2 + y*x + a*x*(x^2+x*a+a) = 0"}}) {
      CAPTURE(eq);
      const Curve c = C(eq, q);
      const auto& c2 = std::get<CharTwoCurve>(c);
      const CanonicalKey key = canonicalize(c);
      auto k = Field::of_order(q);
      for (Code a = 1; a < k->order(); ++a) {
        for (Code b = 0; b < k->order(); ++b) CHECK(canonicalize(Curve{char2_affine(c2, a, b)}) == key);
      }
      Poly d = Poly::constant(k, 1);
      for (const auto& p : c2.poles()) {
        for (int e = 0; e < (p.order - 1) / 2; ++e) d = d * p.place;
      }
      for (int i = 0; i < 10; ++i) {
        const Poly n = rand_poly(k, genus(c) + d.degree(), rng);
        CHECK(canonicalize(Curve{shifted(c2, n, d)}) == key);
      }
    }
  }

  TEST_CASE("canonical key separates different invariants") {
    const SearchResult r = search(2, 3, 2);
    std::set<CanonicalKey> keys(r.keys.begin(), r.keys.end());
    CHECK(keys.size() == r.keys.size());
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      const Curve c = parse_curve(r.classes[i].equation, Field::of_order(2));
      CHECK(canonicalize(c) == r.keys[i]);
    }
  }

  TEST_CASE("moving infinity") {
    const Curve c = C("y^2 = x*(x+1)*(x+2)", 3);
    const auto moves = infinity_moves(c);
    CHECK(moves.size() == 3);
    for (const Curve& m : moves) {
      CHECK(genus(m) == 1);
      CHECK(l_polynomial(m).a == l_polynomial(c).a);
    }
    CHECK(canonicalize_moving_infinity(c) <= canonicalize(c));
  }

  TEST_CASE("collision probe on q=2 g=3 h=4") {
    const SearchResult r = search(2, 3, 4);
    CHECK(r.classes.size() >= 2);
    for (const auto& col : r.stats.collisions) {
      CHECK(col.first != col.second);
      CHECK_FALSE(col.merged_by_wider_shifts);
    }
  }

  TEST_CASE("parallel runs give identical results") {
    SearchOptions one, four;
    four.jobs = 4;
    const SearchResult a = search(2, 4, 4, one);
    const SearchResult b = search(2, 4, 4, four);
    CHECK(a.keys == b.keys);
    CHECK(a.classes == b.classes);
    CHECK(a.stats.candidates == b.stats.candidates);
  }

  TEST_CASE("cache round-trip") {
    SearchOptions o;
    o.cache_dir = temp_dir("cache");
    const SearchResult a = search(3, 2, 4, o);
    CHECK_FALSE(a.stats.from_cache);
    const SearchResult b = search(3, 2, 4, o);
    CHECK(b.stats.from_cache);
    CHECK(a.keys == b.keys);
    CHECK(a.classes == b.classes);
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(o.cache_dir)) {
      files += e.path().filename().string().rfind("q3_g2_h4_v", 0) == 0;
    }
    CHECK(files == 1);
    std::filesystem::remove_all(o.cache_dir);
  }

  TEST_CASE("default cache directory") {
    CHECK(default_cache_dir().size() >= 0);
  }
}
