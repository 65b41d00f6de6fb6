#include "quadff/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "canonical.hpp"
#include "quadff/error.hpp"
#include "quadff/record_io.hpp"
#include "quadff/sieve.hpp"

namespace quadff {

namespace {

int log2_exact(std::int64_t h) {
  int e = 0;
  while ((std::int64_t{1} << e) < h) ++e;
  return e;
}

// Calls emit(indices, sum) for every strictly increasing choice of k entries
// of degs with sum of weight(deg) at most max_sum. degs is sorted.
template <typename Weight, typename Emit>
void choose(const std::vector<int>& degs, int k, int max_sum, Weight weight, Emit emit) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start, int sum) -> void {
    if (static_cast<int>(pick.size()) == k) {
      emit(pick, sum);
      return;
    }
    const int left = k - static_cast<int>(pick.size());
    for (std::size_t i = start; i < degs.size(); ++i) {
      // Entries are sorted by degree, so later ones are at least as heavy.
      if (sum + left * weight(degs[i]) > max_sum) break;
      pick.push_back(i);
      self(self, i + 1, sum + weight(degs[i]));
      pick.pop_back();
    }
  };
  rec(rec, 0, 0);
}

std::vector<Curve> enumerate_odd(const FieldPtr& field, int g, int k) {
  const int total = 2 * g + 1;
  const auto sieve = IrreducibleSieve::get(field, total);
  std::vector<Poly> irr;
  std::vector<int> degs;
  for (int d = 1; d <= total; ++d) {
    for (const Poly& p : sieve->of_degree(d)) {
      irr.push_back(p);
      degs.push_back(d);
    }
  }
  const Code units[2] = {1, field->least_non_square()};
  std::vector<Curve> out;
  choose(degs, k, total, [](int d) { return d; }, [&](const std::vector<std::size_t>& pick, int sum) {
    if (sum != total) return;
    Poly f = Poly::constant(field, 1);
    for (auto i : pick) f *= irr[i];
    for (Code c : units) out.emplace_back(make_odd_curve(field, c, f));
  });
  return out;
}

// Pole orders: all 1, or (strict) every odd assignment within the budget.
void pole_orders(const std::vector<int>& degs, int budget, bool strict, std::vector<int>& orders, std::size_t i,
                 int used, const std::function<void(const std::vector<int>&)>& emit) {
  if (i == degs.size()) {
    emit(orders);
    return;
  }
  for (int gamma = 1;; gamma += 2) {
    const int cost = (gamma + 1) * degs[i];
    if (used + cost > budget) break;
    orders[i] = gamma;
    pole_orders(degs, budget, strict, orders, i + 1, used + cost, emit);
    if (!strict) break;
  }
}

std::vector<Curve> enumerate_char2(const FieldPtr& field, int g, int k, bool strict) {
  const int budget = 2 * g;  // sum (gamma_i + 1) deg p_i < 2g + 1
  const auto sieve = IrreducibleSieve::get(field, std::max(1, g));
  std::vector<Poly> irr;
  std::vector<int> degs;
  for (int d = 1; 2 * d <= budget; ++d) {
    for (const Poly& p : sieve->of_degree(d)) {
      irr.push_back(p);
      degs.push_back(d);
    }
  }
  const Code q = field->order();
  std::vector<Curve> out;
  choose(degs, k, budget, [](int d) { return 2 * d; }, [&](const std::vector<std::size_t>& pick, int) {
    std::vector<int> pdeg;
    int deg_sum = 0;
    for (auto i : pick) {
      pdeg.push_back(degs[i]);
      deg_sum += degs[i];
    }
    const int m = 2 * g + 1 - deg_sum;
    std::vector<int> orders(pick.size(), 1);
    pole_orders(pdeg, budget, strict, orders, 0, 0, [&](const std::vector<int>& gam) {
      std::vector<Code> digits(static_cast<std::size_t>(m) + 1, 0);
      for (Code lead = 1; lead < q; ++lead) {
        std::fill(digits.begin(), digits.end(), 0);
        digits[m] = lead;
        while (true) {
          Poly num(field, digits);
          bool coprime = true;
          for (auto i : pick) {
            if (divides(irr[i], num)) {
              coprime = false;
              break;
            }
          }
          if (coprime) {
            std::vector<PoleFactor> poles;
            for (std::size_t j = 0; j < pick.size(); ++j) poles.push_back({irr[pick[j]], gam[j]});
            out.emplace_back(CharTwoCurve::make(std::move(num), std::move(poles)));
          }
          int pos = 0;
          while (pos < m && ++digits[pos] == q) digits[pos++] = 0;
          if (pos == m) break;
        }
      }
    });
  });
  return out;
}

struct Outcome {
  bool accepted = false;
  std::vector<std::string> zeta_failures;
  std::vector<std::string> record_failures;
  CanonicalKey key;
};

Outcome process(const Curve& curve, std::int64_t h, int slack) {
  Outcome o;
  const ZetaReport z = l_polynomial(curve);
  o.zeta_failures = zeta_property_failures(z);
  const ClassificationRecord r = make_record(curve, z);
  if (r.exponent_two && r.h == h) {
    o.accepted = true;
    if (r.N[0] > r.h) o.record_failures.emplace_back("N_1 > h");
    if (r.h > 32) o.record_failures.emplace_back("h > 32");
    if (!is_feasible(r.q, r.g, r.h)) o.record_failures.emplace_back("(q, g) not in the feasible table");
    if (!in_envelope(r.q, r.g)) o.record_failures.emplace_back("(q, g) outside the genus envelope");
    o.key = canonicalize(curve, slack);
  }
  return o;
}

std::string cache_file(const SearchOptions& o, int q, int g, std::int64_t h) {
  return o.cache_dir + "/q" + std::to_string(q) + "_g" + std::to_string(g) + "_h" + std::to_string(h) +
         (o.strict_gamma ? "_strict" : "") + (o.shift_slack ? "_s" + std::to_string(o.shift_slack) : "") + "_v" +
         QUADFF_VERSION + ".jsonl";
}

bool load_cache(const std::string& path, SearchResult& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CanonicalKey key;
    out.classes.push_back(record_from_jsonl(line, &key));
    out.keys.push_back(std::move(key));
  }
  out.stats.from_cache = true;
  return true;
}

void store_cache(const std::string& path, const SearchResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << search_output(r, Format::jsonl);
  }
  std::filesystem::rename(tmp, path, ec);
}

void add_sample(SearchStats& s, const Curve& c, const std::vector<std::string>& what) {
  if (s.failure_samples.size() >= 10) return;
  std::string msg = equation_text(c) + ":";
  for (const auto& w : what) msg += " " + w;
  s.failure_samples.push_back(msg);
}

}  // namespace

std::vector<Curve> enumerate_candidates(int q, int g, std::int64_t h, bool strict_gamma) {
  if (!is_feasible(q, g, h)) {
    if (!is_supported_h(h)) throw Error(Errc::unsupported_h, "h = " + std::to_string(h));
    throw Error(Errc::infeasible_pair, "(q, g) = (" + std::to_string(q) + ", " + std::to_string(g) +
                                           ") is not feasible for h = " + std::to_string(h));
  }
  const FieldPtr field = Field::of_order(q);
  const bool even = q % 2 == 0;
  const int k = log2_exact(h) + (even ? 0 : 1);  // finite ramified places
  return even ? enumerate_char2(field, g, k, strict_gamma) : enumerate_odd(field, g, k);
}

SearchResult search(int q, int g, std::int64_t h, const SearchOptions& options) {
  SearchResult out;
  out.q = q;
  out.g = g;
  out.h = h;
  const std::string path = options.cache_dir.empty() ? "" : cache_file(options, q, g, h);
  if (!path.empty() && is_feasible(q, g, h) && load_cache(path, out)) return out;
  const std::vector<Curve> candidates = enumerate_candidates(q, g, h, options.strict_gamma);
  out.stats.candidates = candidates.size();

  std::vector<Outcome> outcomes(candidates.size());
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(candidates.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();) {
        outcomes[i] = process(candidates[i], h, options.shift_slack);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = candidates.size();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::map<CanonicalKey, std::size_t> classes;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (!o.zeta_failures.empty()) {
      ++out.stats.zeta_failures;
      add_sample(out.stats, candidates[i], o.zeta_failures);
    }
    if (!o.accepted) continue;
    ++out.stats.accepted;
    if (!o.record_failures.empty()) {
      ++out.stats.record_failures;
      add_sample(out.stats, candidates[i], o.record_failures);
    }
    classes.emplace(o.key, i);
  }
  for (const auto& [key, index] : classes) {
    const Curve rep = canonical_form(candidates[index], options.shift_slack).representative;
    out.keys.push_back(key);
    out.classes.push_back(is_exponent_two(rep));
  }

  // Same invariants, different keys: re-check with wider shifts.
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.classes.size(); ++j) {
      const auto& a = out.classes[i];
      const auto& b = out.classes[j];
      if (a.N != b.N || a.ramification != b.ramification) continue;
      CollisionReport rep{out.keys[i], out.keys[j], a.equation, b.equation};
      const Curve ca = parse_curve(a.equation, Field::of_order(q));
      const Curve cb = parse_curve(b.equation, Field::of_order(q));
      rep.merged_by_wider_shifts =
          canonicalize(ca, options.shift_slack + 2) == canonicalize(cb, options.shift_slack + 2);
      rep.merged_by_moving_infinity =
          canonicalize_moving_infinity(ca, options.shift_slack) == canonicalize_moving_infinity(cb, options.shift_slack);
      out.stats.collisions.push_back(std::move(rep));
    }
  }

  if (!path.empty()) store_cache(path, out);
  return out;
}

std::size_t ClassificationTable::class_count() const {
  std::size_t n = 0;
  for (const auto& r : runs) n += r.classes.size();
  return n;
}

ClassificationTable full_classification(const SearchOptions& options) {
  ClassificationTable t;
  for (std::int64_t h : {2, 4, 8, 16, 32}) {
    auto cases = feasible_cases(h);
    std::sort(cases.begin(), cases.end());
    for (const auto& [q, g] : cases) t.runs.push_back(search(q, g, h, options));
  }
  return t;
}

std::string default_cache_dir() {
  if (const char* d = std::getenv("QUADFF_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::string(d) + "/quadff";
  if (const char* d = std::getenv("HOME"); d && *d) return std::string(d) + "/.cache/quadff";
  return "";
}

}  // namespace quadff
