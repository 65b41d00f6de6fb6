#include "quadff/sieve.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "quadff/error.hpp"

namespace quadff {

namespace {

// Monic polynomials of degree d are indexed by their lower coefficients:
// idx = sum_{i<d} c_i q^i. Index order coincides with the canonical order.
std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<Code> monic_from_index(std::uint64_t idx, int d, Code q) {
  std::vector<Code> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) {
    c[i] = static_cast<Code>(idx % q);
    idx /= q;
  }
  c[d] = 1;
  return c;
}

constexpr std::uint64_t kMaxSieveSize = std::uint64_t{1} << 24;

}  // namespace

IrreducibleSieve::IrreducibleSieve(FieldPtr field, int max_degree) : field_(std::move(field)) {
  if (max_degree < 1) max_degree = 1;
  const Field& k = *field_;
  const Code q = k.order();
  if (power(q, max_degree) > kMaxSieveSize) {
    throw Error(Errc::invalid_argument, "sieve of degree " + std::to_string(max_degree) + " over " + k.name() +
                                            " is too large");
  }
  by_degree_.resize(static_cast<std::size_t>(max_degree) + 1);
  // Lower-coefficient vectors of the irreducibles, per degree, for the
  // product loop below.
  std::vector<std::vector<std::vector<Code>>> raw(by_degree_.size());
  for (int d = 1; d <= max_degree; ++d) {
    const std::uint64_t total = power(q, d);
    std::vector<bool> reducible(total, false);
    for (int kdeg = 1; 2 * kdeg <= d; ++kdeg) {
      const int m = d - kdeg;
      const std::uint64_t cofactors = power(q, m);
      std::vector<Code> prod(static_cast<std::size_t>(d) + 1);
      for (const auto& pc : raw[kdeg]) {
        for (std::uint64_t j = 0; j < cofactors; ++j) {
          const auto mc = monic_from_index(j, m, q);
          std::fill(prod.begin(), prod.end(), 0);
          for (int a = 0; a <= kdeg; ++a) {
            if (pc[a] == 0) continue;
            for (int b = 0; b <= m; ++b) prod[a + b] = k.add(prod[a + b], k.mul(pc[a], mc[b]));
          }
          std::uint64_t idx = 0;
          for (int i = d - 1; i >= 0; --i) idx = idx * q + prod[i];
          reducible[idx] = true;
        }
      }
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (reducible[idx]) continue;
      auto c = monic_from_index(idx, d, q);
      raw[d].push_back(c);
      by_degree_[d].emplace_back(field_, std::move(c));
    }
  }
}

const std::vector<Poly>& IrreducibleSieve::of_degree(int d) const {
  if (d < 1 || d > max_degree()) {
    throw Error(Errc::invalid_argument, "sieve degree " + std::to_string(d) + " outside 1.." +
                                            std::to_string(max_degree()));
  }
  return by_degree_[d];
}

std::shared_ptr<const IrreducibleSieve> IrreducibleSieve::get(const FieldPtr& field, int max_degree) {
  static std::mutex mutex;
  static std::map<const Field*, std::shared_ptr<const IrreducibleSieve>> cache;
  if (max_degree < 1) max_degree = 1;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(field.get());
    if (it != cache.end() && it->second->max_degree() >= max_degree) return it->second;
  }
  auto built = std::make_shared<const IrreducibleSieve>(field, max_degree);
  std::lock_guard lock(mutex);
  auto& slot = cache[field.get()];
  if (!slot || slot->max_degree() < built->max_degree()) slot = built;
  return slot;
}

Poly Factorization::product(const FieldPtr& field) const {
  Poly out = Poly::constant(field, unit);
  for (const auto& f : factors) out *= pow(f.poly, static_cast<unsigned>(f.multiplicity));
  return out;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "factorization of the zero polynomial");
  Factorization out{f.leading(), {}};
  Poly rest = f.monic();
  if (rest.degree() <= 0) return out;
  const auto sieve = IrreducibleSieve::get(f.field_ptr(), std::max(1, rest.degree() / 2));
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const Poly& p : sieve->of_degree(d)) {
      if (2 * d > rest.degree()) break;
      int mult = 0;
      while (true) {
        DivMod qr = divmod(rest, p);
        if (!qr.remainder.is_zero()) break;
        rest = std::move(qr.quotient);
        ++mult;
      }
      if (mult) out.factors.push_back({p, mult});
    }
  }
  if (rest.degree() >= 1) out.factors.push_back({rest, 1});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const Poly m = f.monic();
  if (m.degree() == 1) return true;
  const auto sieve = IrreducibleSieve::get(f.field_ptr(), m.degree() / 2);
  for (int d = 1; 2 * d <= m.degree(); ++d) {
    for (const Poly& p : sieve->of_degree(d)) {
      if (divides(p, m)) return false;
    }
  }
  return true;
}

std::uint64_t count_monic_irreducibles(const FieldPtr& field, int d) {
  if (d < 1) throw Error(Errc::invalid_argument, "degree must be positive");
  return IrreducibleSieve::get(field, d)->count(d);
}

}  // namespace quadff
