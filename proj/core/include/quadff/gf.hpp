#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace quadff {

/// Canonical integer encoding of a field element. For F_{q^s} built over F_q
/// with coordinates c_0..c_{s-1}, the code is sum c_i * q^i, and base-field
/// coordinates are encoded the same way over F_p. Equivalently: the base-p
/// digits of the code are the prime-field coordinates.
using Code = std::uint32_t;

class Field;
class Element;
using FieldPtr = std::shared_ptr<const Field>;

/// A finite field F_{q^s}, q = p^n, built as a degree-s extension of F_q
/// (which is in turn a degree-n extension of F_p). Instances are interned:
/// make() returns the same object for the same (p, n, s), so pointer
/// identity is field identity. Immutable and safe to share across threads.
class Field {
 public:
  static constexpr Code kMaxOrder = 1u << 20;

  /// Throws Errc::unsupported_order outside p in {2,3,5,7}, q in
  /// {2,3,4,5,7,8,9}, s in [1,10], q^s <= 2^20.
  static FieldPtr make(int p, int n, int s = 1);
  /// Field of order q (2,3,4,5,7,8,9) as F_q itself.
  static FieldPtr of_order(int q);
  static bool supported(int p, int n, int s) noexcept;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int characteristic() const noexcept { return p_; }
  int base_degree() const noexcept { return n_; }
  int extension_degree() const noexcept { return s_; }
  Code base_order() const noexcept { return q_; }
  Code order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return n_ == 1 && s_ == 1; }

  /// Monic modulus of F_{q^s} over F_q, coefficients ascending (size s+1).
  /// Empty when s == 1.
  const std::vector<Code>& modulus() const noexcept { return modulus_; }
  /// Monic modulus of F_q over F_p (size n+1). Empty when n == 1.
  const std::vector<Code>& prime_modulus() const noexcept;

  /// The base field F_q (this field when s == 1).
  FieldPtr base() const;
  /// True when both fields extend the same F_q.
  bool same_base(const Field& other) const noexcept { return p_ == other.p_ && n_ == other.n_; }

  Code add(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept;

  Code primitive_element() const noexcept { return exp_[1]; }
  /// Discrete log to the primitive element; a must be nonzero.
  std::uint32_t log(Code a) const noexcept { return log_[a]; }

  /// 1 for nonzero squares, -1 for non-squares, 0 for zero. Odd p only.
  int quadratic_character(Code a) const noexcept {
    if (a == 0) return 0;
    return (log_[a] & 1u) ? -1 : 1;
  }
  /// Absolute trace to F_2 (0 or 1). p == 2 only.
  int absolute_trace(Code a) const noexcept { return __builtin_parity(a & trace_mask_); }
  /// The unique square root in characteristic 2.
  Code sqrt_char2(Code a) const noexcept;
  /// Least non-square (odd p), by code.
  Code least_non_square() const;

  /// Coordinates over F_q (size s).
  std::vector<Code> coordinates(Code a) const;
  Code from_coordinates(std::span<const Code> coords) const;

  /// Integers for prime fields, `a`-polynomials for F_4, F_8, F_9, and
  /// bracketed coordinate vectors for proper extensions of F_q.
  std::string format(Code a) const;
  /// Short name, e.g. "F_4" or "F_2^5" (the latter for F_{2^5} over F_2).
  std::string name() const;
  /// Name plus defining moduli, e.g. "F_4 = F_2[a]/(a^2+a+1)".
  std::string description() const;

  Element element(Code c) const;
  Element zero() const;
  Element one() const;
  std::vector<Element> elements() const;

 private:
  Field(int p, int n, int s, FieldPtr ground);
  void build_prime();
  void build_extension();
  void build_addition();
  void build_trace();

  // Slow polynomial-basis arithmetic over the ground field, used only while
  // building the log tables.
  Code mul_slow(Code a, Code b) const;

  int p_, n_, s_;
  Code q_, order_;
  FieldPtr ground_;       // field this one extends directly (null for F_p)
  int ground_degree_ = 1;  // degree over ground
  std::vector<Code> modulus_;
  std::vector<Code> ground_modulus_;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
  // Odd characteristic addition works digit-wise in base p on chunks of C digits.
  Code chunk_ = 0;
  std::vector<std::uint8_t> chunk_add_;
  std::vector<std::uint8_t> chunk_neg_;
  Code trace_mask_ = 0;
};

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws Errc::mixed_field.
class Element {
 public:
  Element(const Field* field, Code code) : field_(field), code_(code) {}

  const Field& field() const noexcept { return *field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  Element inv() const;
  Element pow(std::uint64_t e) const;
  std::string to_string() const { return field_->format(code_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  /// Throws Errc::mixed_field when the fields differ.
  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field* field_;
  Code code_;
};

/// Injects an element of F_q into an extension F_{q^s} as a constant
/// coefficient vector. The canonical code is unchanged by construction.
Element embed(const Element& base_element, const Field& extension);

}  // namespace quadff
