#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "cli.hpp"
#include "quadff/classify.hpp"
#include "quadff/error.hpp"
#include "quadff/search.hpp"
#include "quadff/sieve.hpp"
#include "quadff/zeta.hpp"

namespace quadff::cli {

namespace {

struct Published {
  int number;
  int q;
  int g;
  std::int64_t h;
  std::vector<std::int64_t> N;
  const char* equation;
};

const std::vector<Published>& published() {
  static const std::vector<Published> list = {
      {1, 2, 1, 2, {2}, "y^2 + x*y + x*(x^2+x+1) = 0"},
      {2, 2, 2, 2, {2, 1}, "y^2 + x*y + x*(x^4+x+1) = 0"},
      {3, 2, 2, 2, {1, 3}, "y^2 + (x^2+x+1)*y + (x^2+x+1)*(x^3+x+1) = 0"},
      {4, 2, 3, 2, {1, 3, 0}, "y^2 + (x^2+x+1)*y + (x^2+x+1)*(x^5+x^2+1) = 0"},
      {5, 2, 3, 2, {1, 2, 1}, "y^2 + (x^3+x^2+1)*y + (x^3+x^2+1)*(x^4+x^3+1) = 0"},
      {6, 3, 1, 2, {2}, "y^2 - (x+2)*(x^2+1) = 0"},
      {7, 4, 1, 2, {2}, "y^2 + y*x + a*x*(x^2+x*a+a) = 0"},
      {8, 5, 1, 2, {2}, "y^2 - x*(x^2+2) = 0"},
      {9, 2, 2, 4, {3, 0}, "y^2 + x*(x+1)*y + x*(x+1)*(x^3+x+1) = 0"},
      {10, 2, 3, 4, {3, 0, 0}, "y^2 + x*(x+1)*y + x*(x+1)*(x^5+x^3+x^2+x+1) = 0"},
      {11, 2, 3, 4, {2, 2, 0}, "y^2 + x*(x^2+x+1)*y + x*(x^2+x+1)*(x^4+x+1) = 0"},
      {12, 3, 2, 4, {3, 1}, "y^2 - 2*x*(x+1)*(x^3+x^2+x+2) = 0"},
      {13, 3, 2, 4, {2, 4}, "y^2 - 2*(x+2)*(x^2+1)*(x^2+x+2) = 0"},
      {14, 3, 2, 8, {4, 1}, "y^2 - x*(x+1)*(x+2)*(x^2+1) = 0"},
  };
  return list;
}

class Checks {
 public:
  explicit Checks(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    ok ? ++passed_ : ++failed_;
    out_ << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << '\n';
  }

  template <typename F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, name, e.what());
    }
  }

  int finish() {
    out_ << "selftest: " << passed_ << " passed, " << failed_ << " failed\n";
    return failed_ == 0 ? 0 : 1;
  }

 private:
  std::ostream& out_;
  int passed_ = 0;
  int failed_ = 0;
};

std::string list(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string summary(const ClassificationRecord& r) {
  return "q=" + std::to_string(r.q) + " g=" + std::to_string(r.g) + " h=" + std::to_string(r.h) + " N=" +
         list(r.N) + (r.exponent_two ? " exponent two" : " not exponent two");
}

std::int64_t dedekind(int q, int d) {
  std::int64_t sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    std::int64_t qe = 1;
    for (int i = 0; i < e; ++i) qe *= q;
    sum += moebius(d / e) * qe;
  }
  return sum / d;
}

}  // namespace

int selftest(unsigned jobs, std::ostream& out) {
  Checks c(out);
  const auto start = std::chrono::steady_clock::now();

  for (const Published& p : published()) {
    const std::string name = "example " + std::to_string(p.number);
    c.guarded(name, [&] {
      const ClassificationRecord r = is_exponent_two(parse_curve(p.equation, Field::of_order(p.q)));
      c.check(r.q == p.q && r.g == p.g && r.h == p.h && r.N == p.N && r.exponent_two, name, summary(r));
    });
  }

  c.guarded("correction pair", [&] {
    const auto f2 = Field::of_order(2);
    const auto bad = is_exponent_two(parse_curve("y^2 + (x^3+x+1)*y = (x^3+x+1)*(x^4+x+1)", f2));
    const auto good = is_exponent_two(parse_curve("y^2 + (x^3+x+1)*y = (x^3+x+1)*(x^4+x^3+x^2+x+1)", f2));
    c.check(bad.h == 4 && bad.N == std::vector<std::int64_t>{1, 2, 3} && !bad.exponent_two,
            "correction pair, original curve", summary(bad));
    c.check(good.h == 2 && good.N == std::vector<std::int64_t>{1, 2, 1} && good.exponent_two,
            "correction pair, corrected curve", summary(good));
  });

  c.guarded("irreducible counts", [&] {
    bool ok = true;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
      for (int d = 1; d <= 6; ++d) {
        ok = ok && static_cast<std::int64_t>(count_monic_irreducibles(Field::of_order(q), d)) == dedekind(q, d);
      }
    }
    c.check(ok, "irreducible counts", "q in {2,3,4,5,7,8,9}, d <= 6");
  });

  c.guarded("feasible table", [&] {
    std::string issues;
    for (std::int64_t h : {2, 4, 8, 16, 32}) {
      for (const auto& i : validate_feasible_cases(h)) {
        issues += "h=" + std::to_string(h) + " (" + std::to_string(i.q) + "," + std::to_string(i.g) + ") ";
      }
    }
    c.check(issues.empty(), "feasible table", issues.empty() ? "every excluded pair has a reason" : issues);
  });

  c.guarded("s-bound exclusions", [&] {
    std::string bad;
    for (std::int64_t h : {2, 4, 8, 16, 32}) {
      for (const auto& [q, g0] : s_bound_exclusions(h)) {
        for (int g = g0; g <= 11; ++g) {
          if (s_bound(q, g, h).sign <= 0) {
            bad += "(" + std::to_string(q) + "," + std::to_string(g) + "," + std::to_string(h) + ") ";
          }
        }
      }
    }
    c.check(bad.empty(), "s-bound exclusions", bad.empty() ? "all positive" : bad);
  });

  c.guarded("classification", [&] {
    SearchOptions options;
    options.jobs = jobs;
    const ClassificationTable table = full_classification(options);
    std::size_t candidates = 0, zeta_failures = 0, record_failures = 0;
    std::size_t by_h[33] = {};
    bool consistent = true;
    for (const auto& run : table.runs) {
      candidates += run.stats.candidates;
      zeta_failures += run.stats.zeta_failures;
      record_failures += run.stats.record_failures;
      by_h[run.h] += run.classes.size();
      for (const auto& r : run.classes) {
        const Curve curve = parse_curve(r.equation, Field::of_order(r.q));
        consistent = consistent && r.h == expected_h(r.q, ramified_places(curve).t) && r.N[0] <= r.h;
      }
    }
    c.check(zeta_failures == 0, "zeta invariants",
            std::to_string(candidates) + " candidates, " + std::to_string(zeta_failures) + " failures");
    c.check(record_failures == 0 && consistent, "class invariants",
            "h = 2^(t-1) or 2^(t-2), N_1 <= h, table membership");
    c.check(by_h[16] == 0, "no class with h = 16", std::to_string(by_h[16]) + " found");
    c.check(by_h[32] == 0, "no class with h = 32", std::to_string(by_h[32]) + " found");
    c.check(table.class_count() == 14 && by_h[2] == 8 && by_h[4] == 5 && by_h[8] == 1, "class count",
            "h=2: " + std::to_string(by_h[2]) + ", h=4: " + std::to_string(by_h[4]) + ", h=8: " +
                std::to_string(by_h[8]) + ", h=16: " + std::to_string(by_h[16]) + ", total " + std::to_string(table.class_count()));
    for (const Published& p : published()) {
      const CanonicalKey key = canonicalize(parse_curve(p.equation, Field::of_order(p.q)));
      bool found = false;
      for (const auto& run : table.runs) {
        if (run.q == p.q && run.g == p.g && run.h == p.h) {
          found = std::find(run.keys.begin(), run.keys.end(), key) != run.keys.end();
        }
      }
      c.check(found, "example " + std::to_string(p.number) + " in the classification");
    }
  });

  const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "elapsed: " << static_cast<long>(seconds * 1000) << " ms\n";
  return c.finish();
}

}  // namespace quadff::cli
