#include <doctest.h>

#include "quadff/error.hpp"
#include "quadff/record_io.hpp"

using namespace quadff;

namespace {

ClassificationRecord example() {
  return is_exponent_two(parse_curve("y^2 + x*y + x*(x^2+x+1) = 0", Field::of_order(2)));
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("record round-trip") {
    const ClassificationRecord r = example();
    const CanonicalKey key{3, 1, 4, 1, 5};
    const std::string line = record_jsonl(r, &key);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.rfind("{\"schema\":\"quadff.record/1\",\"q\":2,", 0) == 0);
    CanonicalKey back;
    CHECK(record_from_jsonl(line, &back) == r);
    CHECK(back == key);
    CanonicalKey none{9};
    CHECK(record_from_jsonl(record_jsonl(r), &none) == r);
    CHECK(none.empty());
  }

  TEST_CASE("malformed records") {
    for (const char* bad : {"", "{", "{\"schema\":\"other\"}", "{\"schema\":\"quadff.record/1\",\"q\":\"two\"}", "[1,2]"}) {
      try {
        record_from_jsonl(bad);
        FAIL("expected io_error");
      } catch (const Error& e) {
        CHECK(e.code() == Errc::io_error);
      }
    }
  }

  TEST_CASE("text forms") {
    const std::string t = record_text(example());
    CHECK(t.find("equation") != std::string::npos);
    CHECK(t.find("(1, -1, 2)") != std::string::npos);
    const ZetaReport z = l_polynomial(parse_curve("y^2 + x*y + x*(x^2+x+1) = 0", Field::of_order(2)));
    CHECK(zeta_jsonl(z).rfind("{\"schema\":\"quadff.zeta/1\"", 0) == 0);
    CHECK(!zeta_text(z).empty());
  }

  TEST_CASE("search output is deterministic") {
    const SearchResult r = search(2, 1, 2);
    CHECK(search_output(r, Format::text) == search_output(search(2, 1, 2), Format::text));
    const std::string j = search_output(r, Format::jsonl);
    CHECK(std::count(j.begin(), j.end(), '\n') == static_cast<long>(r.classes.size()));
  }
}
