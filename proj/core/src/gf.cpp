#include "quadff/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "quadff/error.hpp"

namespace quadff {

namespace {

Code ipow(Code base, int e) {
  Code r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Dense polynomials over a ground field, coefficients ascending. Used only to
// find moduli and primitive elements during construction.
using GroundPoly = std::vector<Code>;

void trim(GroundPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
GroundPoly rem_monic(GroundPoly a, const GroundPoly& b, const Field& k) {
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    const Code lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = k.sub(a[shift + i], k.mul(lead, b[i]));
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool brute_force_irreducible(const GroundPoly& f, const Field& k) {
  const int d = static_cast<int>(f.size()) - 1;
  const Code r = k.order();
  // Roots first: cheap rejection.
  for (Code x = 0; x < r; ++x) {
    Code acc = 0;
    for (int i = d; i >= 0; --i) acc = k.add(k.mul(acc, x), f[i]);
    if (acc == 0) return false;
  }
  for (int m = 2; 2 * m <= d; ++m) {
    const Code count = ipow(r, m);
    GroundPoly div(m + 1);
    div[m] = 1;
    for (Code idx = 0; idx < count; ++idx) {
      Code v = idx;
      for (int i = 0; i < m; ++i) {
        div[i] = v % r;
        v /= r;
      }
      if (rem_monic(f, div, k).empty()) return false;
    }
  }
  return true;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<int, int, int>, FieldPtr>& registry() {
  static std::map<std::tuple<int, int, int>, FieldPtr> r;
  return r;
}

const std::vector<Code> kEmpty;

}  // namespace

bool Field::supported(int p, int n, int s) noexcept {
  if (p != 2 && p != 3 && p != 5 && p != 7) return false;
  if (n < 1 || s < 1 || s > 10) return false;
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
  if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7 && q != 8 && q != 9) return false;
  std::uint64_t order = 1;
  for (int i = 0; i < s; ++i) {
    order *= q;
    if (order > kMaxOrder) return false;
  }
  return true;
}

FieldPtr Field::of_order(int q) {
  switch (q) {
    case 2: return make(2, 1);
    case 3: return make(3, 1);
    case 4: return make(2, 2);
    case 5: return make(5, 1);
    case 7: return make(7, 1);
    case 8: return make(2, 3);
    case 9: return make(3, 2);
    default:
      throw Error(Errc::unsupported_order, "no supported field of order " + std::to_string(q));
  }
}

FieldPtr Field::make(int p, int n, int s) {
  if (!supported(p, n, s)) {
    throw Error(Errc::unsupported_order, "F_{" + std::to_string(p) + "^" + std::to_string(n * s) +
                                             "} (p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                                             ", s=" + std::to_string(s) + ") is outside the supported range");
  }
  const auto key = std::make_tuple(p, n, s);
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
  }
  FieldPtr ground;
  if (s > 1) {
    ground = make(p, n, 1);
  } else if (n > 1) {
    ground = make(p, 1, 1);
  }
  FieldPtr built(new Field(p, n, s, std::move(ground)));
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().emplace(key, std::move(built));
  return it->second;
}

Field::Field(int p, int n, int s, FieldPtr ground)
    : p_(p), n_(n), s_(s), q_(ipow(static_cast<Code>(p), n)), order_(ipow(q_, s)), ground_(std::move(ground)) {
  if (!ground_) {
    build_prime();
  } else {
    ground_degree_ = (s_ > 1) ? s_ : n_;
    build_extension();
  }
  build_addition();
  if (p_ == 2) build_trace();
}

void Field::build_prime() {
  const Code pp = static_cast<Code>(p_);
  const auto factors = prime_factors(pp - 1);
  Code g = 1;
  for (Code c = 1; c < pp; ++c) {
    bool ok = true;
    for (auto f : factors) {
      Code acc = 1;
      for (std::uint64_t i = 0; i < (pp - 1) / f; ++i) acc = acc * c % pp;
      if (acc == 1) ok = false;
    }
    if (ok) {
      g = c;
      break;
    }
  }
  exp_.assign(2 * (pp - 1), 0);
  log_.assign(pp, 0);
  Code acc = 1;
  for (Code i = 0; i < pp - 1; ++i) {
    exp_[i] = acc;
    exp_[i + pp - 1] = acc;
    log_[acc] = i;
    acc = acc * g % pp;
  }
}

Code Field::mul_slow(Code a, Code b) const {
  const Field& k = *ground_;
  const Code r = k.order();
  const int d = ground_degree_;
  GroundPoly pa(d), pb(d);
  for (int i = 0; i < d; ++i) {
    pa[i] = a % r;
    a /= r;
    pb[i] = b % r;
    b /= r;
  }
  GroundPoly prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (pa[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = k.add(prod[i + j], k.mul(pa[i], pb[j]));
  }
  GroundPoly red = rem_monic(std::move(prod), ground_modulus_, k);
  Code out = 0;
  for (int i = static_cast<int>(red.size()) - 1; i >= 0; --i) out = out * r + red[i];
  return out;
}

void Field::build_extension() {
  const Field& k = *ground_;
  const Code r = k.order();
  const int d = ground_degree_;

  // Lexicographically least monic irreducible: tuples (c_0, ..., c_{d-1})
  // compared from the constant term upward.
  const Code count = ipow(r, d);
  bool found = false;
  GroundPoly cand(d + 1);
  cand[d] = 1;
  for (Code idx = 0; idx < count && !found; ++idx) {
    Code v = idx;
    for (int i = d - 1; i >= 0; --i) {
      cand[i] = v % r;
      v /= r;
    }
    if (brute_force_irreducible(cand, k)) found = true;
  }
  if (!found) {
    throw Error(Errc::no_irreducible, "no monic irreducible of degree " + std::to_string(d) + " over " + k.name());
  }
  ground_modulus_ = cand;
  if (s_ > 1) modulus_ = cand;

  const std::uint64_t group = order_ - 1;
  const auto factors = prime_factors(group);
  auto pow_slow = [&](Code a, std::uint64_t e) {
    Code res = 1, b = a;
    while (e) {
      if (e & 1) res = mul_slow(res, b);
      b = mul_slow(b, b);
      e >>= 1;
    }
    return res;
  };
  Code gen = 0;
  for (Code c = 2; c < order_; ++c) {
    bool ok = true;
    for (auto f : factors) {
      if (pow_slow(c, group / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw Error(Errc::no_irreducible, "no primitive element found in " + name());

  exp_.assign(2 * group, 0);
  log_.assign(order_, 0);
  Code acc = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = acc;
    exp_[i + group] = acc;
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = mul_slow(acc, gen);
  }
  if (acc != 1) throw Error(Errc::no_irreducible, "log table construction failed for " + name());
}

void Field::build_addition() {
  if (p_ == 2) return;
  const Code pp = static_cast<Code>(p_);
  chunk_ = pp;
  while (chunk_ * pp <= 243 && chunk_ < order_) chunk_ *= pp;
  chunk_add_.assign(static_cast<std::size_t>(chunk_) * chunk_, 0);
  chunk_neg_.assign(chunk_, 0);
  for (Code a = 0; a < chunk_; ++a) {
    Code na = 0;
    for (Code x = a, m = 1; m < chunk_; m *= pp, x /= pp) na += ((pp - x % pp) % pp) * m;
    chunk_neg_[a] = static_cast<std::uint8_t>(na);
    for (Code b = 0; b < chunk_; ++b) {
      Code s = 0;
      for (Code x = a, y = b, m = 1; m < chunk_; m *= pp, x /= pp, y /= pp) s += ((x % pp + y % pp) % pp) * m;
      chunk_add_[static_cast<std::size_t>(a) * chunk_ + b] = static_cast<std::uint8_t>(s);
    }
  }
}

void Field::build_trace() {
  int bits = 0;
  while ((Code{1} << bits) < order_) ++bits;
  trace_mask_ = 0;
  for (int j = 0; j < bits; ++j) {
    Code v = Code{1} << j, t = 0, x = v;
    for (int i = 0; i < bits; ++i) {
      t ^= x;
      x = mul(x, x);
    }
    if (t == 1) trace_mask_ |= v;
  }
}

Code Field::add(Code a, Code b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (order_ <= chunk_) return chunk_add_[static_cast<std::size_t>(a) * chunk_ + b];
  Code out = 0, m = 1;
  while (a | b) {
    out += chunk_add_[static_cast<std::size_t>(a % chunk_) * chunk_ + b % chunk_] * m;
    a /= chunk_;
    b /= chunk_;
    m *= chunk_;
  }
  return out;
}

Code Field::neg(Code a) const noexcept {
  if (p_ == 2) return a;
  if (order_ <= chunk_) return chunk_neg_[a];
  Code out = 0, m = 1;
  while (a) {
    out += chunk_neg_[a % chunk_] * m;
    a /= chunk_;
    m *= chunk_;
  }
  return out;
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero in " + name());
  return exp_[(order_ - 1) - log_[a]];
}

Code Field::pow(Code a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % group)) % group];
}

Code Field::sqrt_char2(Code a) const noexcept {
  if (a == 0) return 0;
  const std::uint64_t group = order_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (order_ / 2)) % group];
}

Code Field::least_non_square() const {
  if (p_ == 2) throw Error(Errc::even_characteristic, "every element of " + name() + " is a square");
  for (Code c = 1; c < order_; ++c) {
    if (quadratic_character(c) < 0) return c;
  }
  throw Error(Errc::invalid_argument, "no non-square found");
}

const std::vector<Code>& Field::prime_modulus() const noexcept {
  if (n_ == 1) return kEmpty;
  if (s_ == 1) return ground_modulus_;
  return ground_->prime_modulus();
}

FieldPtr Field::base() const {
  if (s_ == 1) return make(p_, n_, 1);
  return ground_;
}

std::vector<Code> Field::coordinates(Code a) const {
  std::vector<Code> out(s_);
  for (int i = 0; i < s_; ++i) {
    out[i] = a % q_;
    a /= q_;
  }
  return out;
}

Code Field::from_coordinates(std::span<const Code> coords) const {
  if (coords.size() != static_cast<std::size_t>(s_)) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(s_) + " coordinates");
  }
  Code out = 0;
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= q_) throw Error(Errc::coefficient_out_of_field, "coordinate outside F_q");
    out = out * q_ + coords[i];
  }
  return out;
}

namespace {

std::string format_prime_poly(Code a, int p, int n, char var) {
  // digits of a in base p, highest first
  std::vector<Code> digits(n);
  for (int i = 0; i < n; ++i) {
    digits[i] = a % static_cast<Code>(p);
    a /= static_cast<Code>(p);
  }
  std::string out;
  for (int i = n - 1; i >= 0; --i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(digits[i]);
      continue;
    }
    if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string Field::format(Code a) const {
  if (s_ == 1) {
    if (n_ == 1) return std::to_string(a);
    return format_prime_poly(a, p_, n_, 'a');
  }
  const FieldPtr b = base();
  std::string out = "[";
  for (int i = 0; i < s_; ++i) {
    if (i) out += ",";
    out += b->format(a % q_);
    a /= q_;
  }
  return out + "]";
}

std::string Field::name() const {
  if (s_ == 1) return "F_" + std::to_string(q_);
  return "F_" + std::to_string(q_) + "^" + std::to_string(s_);
}

std::string Field::description() const {
  std::ostringstream os;
  os << name();
  const auto& pm = prime_modulus();
  if (s_ == 1 && n_ > 1) {
    os << " = F_" << p_ << "[a]/(";
    bool first = true;
    for (int i = static_cast<int>(pm.size()) - 1; i >= 0; --i) {
      if (pm[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << pm[i];
        continue;
      }
      if (pm[i] != 1) os << pm[i] << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
    os << ")";
  } else if (s_ > 1) {
    const FieldPtr b = base();
    os << " = " << b->name() << "[t]/(";
    bool first = true;
    for (int i = s_; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      const std::string c = b->format(modulus_[i]);
      const bool compound = c.find('+') != std::string::npos;
      if (i == 0) {
        os << c;
        continue;
      }
      if (modulus_[i] != 1) os << (compound ? "(" + c + ")" : c) << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

Element Field::element(Code c) const {
  if (c >= order_) throw Error(Errc::coefficient_out_of_field, std::to_string(c) + " is not a code of " + name());
  return Element(this, c);
}

Element Field::zero() const { return Element(this, 0); }
Element Field::one() const { return Element(this, 1); }

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (Code c = 0; c < order_; ++c) out.emplace_back(this, c);
  return out;
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (&a.field() != &b.field()) {
    throw Error(Errc::mixed_field, "operands from " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(&a.field(), a.field().add(a.code(), b.code()));
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(&a.field(), a.field().sub(a.code(), b.code()));
}

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(&a.field(), a.field().mul(a.code(), b.code()));
}

Element operator/(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(&a.field(), a.field().div(a.code(), b.code()));
}

Element operator-(const Element& a) { return Element(&a.field(), a.field().neg(a.code())); }

bool operator==(const Element& a, const Element& b) {
  require_same(a, b);
  return a.code() == b.code();
}

Element Element::inv() const { return Element(field_, field_->inv(code_)); }

Element Element::pow(std::uint64_t e) const { return Element(field_, field_->pow(code_, e)); }

Element embed(const Element& base_element, const Field& extension) {
  const Field& b = base_element.field();
  if (b.extension_degree() != 1 || !b.same_base(extension)) {
    throw Error(Errc::field_mismatch, "cannot embed " + b.name() + " into " + extension.name());
  }
  return extension.element(base_element.code());
}

}  // namespace quadff
