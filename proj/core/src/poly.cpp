#include "quadff/poly.hpp"

#include <algorithm>

#include "quadff/error.hpp"

namespace quadff {

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Code c : c_) {
    if (c >= field_->order()) {
      throw Error(Errc::coefficient_out_of_field, std::to_string(c) + " is not an element of " + field_->name());
    }
  }
  trim();
}

Poly Poly::constant(FieldPtr field, Code c) { return Poly(std::move(field), std::vector<Code>{c}); }

Poly Poly::monomial(FieldPtr field, Code c, int degree) {
  std::vector<Code> v(static_cast<std::size_t>(degree) + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same(const Poly& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::mixed_field, "polynomials over " + field_->name() + " and " + o.field_->name());
  }
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  const Field& k = *field_;
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = k.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  const Field& k = *field_;
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = k.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same(b);
  Poly out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& k = *a.field_;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out.c_[i + j] = k.add(out.c_[i + j], k.mul(a.c_[i], b.c_[j]));
    }
  }
  out.trim();
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.c_) c = field_->neg(c);
  return out;
}

Poly Poly::scaled(Code c) const {
  Poly out(*this);
  for (auto& v : out.c_) v = field_->mul(v, c);
  out.trim();
  return out;
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::derivative() const {
  Poly out(field_);
  if (c_.size() <= 1) return out;
  out.c_.resize(c_.size() - 1);
  const Field& k = *field_;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    // i * c_i, with i reduced mod p and added repeatedly
    Code acc = 0;
    const std::size_t times = i % static_cast<std::size_t>(k.characteristic());
    for (std::size_t t = 0; t < times; ++t) acc = k.add(acc, c_[i]);
    out.c_[i - 1] = acc;
  }
  out.trim();
  return out;
}

Code Poly::eval(Code x) const noexcept {
  const Field& k = *field_;
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = k.add(k.mul(acc, x), c_[i]);
  return acc;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const Field& k = *field_;
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Code c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    const std::string cs = k.format(c);
    const bool compound = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += (compound ? "(" + cs + ")" : cs) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (a.field_ptr() != b.field_ptr()) throw Error(Errc::mixed_field, "polynomial division across fields");
  const Field& k = a.field();
  const int db = b.degree();
  std::vector<Code> r = a.coeffs();
  if (a.degree() < db) return {Poly(a.field_ptr()), a};
  std::vector<Code> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const Code inv_lead = k.inv(b.leading());
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const Code c = r[i];
    if (c == 0) continue;
    const Code f = k.mul(c, inv_lead);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(f, bc[j]));
  }
  r.resize(db);
  return {Poly(a.field_ptr(), std::move(q)), Poly(a.field_ptr(), std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = a % m;
  Poly t0(m.field_ptr()), t1 = Poly::constant(m.field_ptr(), 1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw Error(Errc::division_by_zero, "polynomial not invertible modulo " + m.to_string());
  return (t0.scaled(m.field().inv(r0.leading()))) % m;
}

Poly pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(f.field_ptr(), 1);
  Poly base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(m.field_ptr(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1u) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

Poly compose_affine(const Poly& f, Code a, Code b) {
  const FieldPtr& fp = f.field_ptr();
  const Poly lin(fp, std::vector<Code>{b, a});
  Poly acc(fp);
  for (int i = f.degree(); i >= 0; --i) {
    acc *= lin;
    acc += Poly::constant(fp, f.coeff(i));
  }
  return acc;
}

Code eval_poly(const Poly& f, const Field& extension, Code x0) {
  if (!f.field().same_base(extension) || f.field().extension_degree() != 1) {
    throw Error(Errc::field_mismatch, "cannot evaluate a polynomial over " + f.field().name() + " at a point of " +
                                          extension.name());
  }
  if (x0 >= extension.order()) throw Error(Errc::coefficient_out_of_field, "point outside " + extension.name());
  // Base-field codes embed unchanged into the extension.
  const auto& c = f.coeffs();
  Code acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = extension.add(extension.mul(acc, x0), c[i]);
  return acc;
}

Element eval_poly(const Poly& f, const Element& x0) {
  return x0.field().element(eval_poly(f, x0.field(), x0.code()));
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "square-freeness of the zero polynomial");
  if (f.degree() <= 0) return true;
  const Poly d = f.derivative();
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

void append_key(const Poly& f, std::vector<std::uint32_t>& out) {
  out.push_back(static_cast<std::uint32_t>(f.degree() + 1));
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) out.push_back(c[i]);
}

}  // namespace quadff
