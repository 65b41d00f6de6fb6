#include "quadff/parse.hpp"

#include <cctype>
#include <string>

#include "quadff/error.hpp"

namespace quadff {

Poly BiPoly::coeff(int k, const FieldPtr& field) const {
  if (k >= 0 && k < static_cast<int>(by_y.size())) return by_y[k];
  return Poly(field);
}

namespace {

constexpr int kMaxYDegree = 8;
constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, FieldPtr field, bool allow_y)
      : text_(text), field_(std::move(field)), allow_y_(allow_y) {}

  BiPoly parse_all() {
    BiPoly v = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

  ParsedRatio parse_ratio_all() {
    BiPoly num = expr();
    skip_ws();
    BiPoly den = constant(1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = expr();
      skip_ws();
    }
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return {as_poly(num), as_poly(den)};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::syntax_error, msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == 'x' || c == 'y' || c == 'a';
  }

  Poly as_poly(const BiPoly& v) const {
    if (v.y_degree() > 0) throw Error(Errc::syntax_error, "unexpected 'y' in \"" + std::string(text_) + "\"");
    return v.coeff(0, field_);
  }

  BiPoly constant(Code c) const { return BiPoly{{Poly::constant(field_, c)}}; }

  static void trim(BiPoly& v) {
    while (!v.by_y.empty() && v.by_y.back().is_zero()) v.by_y.pop_back();
  }

  BiPoly add(const BiPoly& a, const BiPoly& b, bool subtract) const {
    BiPoly out;
    const std::size_t n = std::max(a.by_y.size(), b.by_y.size());
    for (std::size_t k = 0; k < n; ++k) {
      Poly pa = a.coeff(static_cast<int>(k), field_);
      Poly pb = b.coeff(static_cast<int>(k), field_);
      out.by_y.push_back(subtract ? pa - pb : pa + pb);
    }
    trim(out);
    return out;
  }

  BiPoly mul(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    if (a.by_y.empty() || b.by_y.empty()) return out;
    const std::size_t n = a.by_y.size() + b.by_y.size() - 1;
    if (static_cast<int>(n) - 1 > kMaxYDegree) fail("degree in y too large");
    out.by_y.assign(n, Poly(field_));
    for (std::size_t i = 0; i < a.by_y.size(); ++i)
      for (std::size_t j = 0; j < b.by_y.size(); ++j) out.by_y[i + j] += a.by_y[i] * b.by_y[j];
    trim(out);
    return out;
  }

  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = add(acc, term(), false);
      } else if (peek('-')) {
        ++pos_;
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, unary());
      } else if (starts_primary()) {
        acc = mul(acc, unary());
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (peek('-')) {
      ++pos_;
      return add(BiPoly{}, unary(), true);
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      const unsigned e = nat_value();
      if (e > kMaxExponent) fail("exponent too large");
      BiPoly out = constant(1);
      for (unsigned i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  unsigned nat_value() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1000000000ULL) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  BiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const unsigned v = nat_value();
      return constant(static_cast<Code>(v % static_cast<unsigned>(field_->characteristic())));
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return BiPoly{{Poly::x(field_)}};
    }
    if (c == 'y') {
      if (!allow_y_) fail("unexpected 'y'");
      ++pos_;
      return BiPoly{{Poly(field_), Poly::constant(field_, 1)}};
    }
    if (c == 'a') {
      if (field_->base_degree() == 1) {
        throw Error(Errc::coefficient_out_of_field,
                    "'a' at position " + std::to_string(pos_) + " but " + field_->name() + " is a prime field");
      }
      ++pos_;
      return constant(static_cast<Code>(field_->characteristic()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  FieldPtr field_;
  bool allow_y_;
  std::size_t pos_ = 0;
};

void require_base_field(const FieldPtr& field) {
  if (field->extension_degree() != 1) {
    throw Error(Errc::field_mismatch, "polynomials are parsed over F_q, not " + field->name());
  }
}

}  // namespace

Poly parse_poly(std::string_view text, const FieldPtr& field) {
  require_base_field(field);
  Parser parser(text, field, false);
  return parser.parse_all().coeff(0, field);
}

BiPoly parse_bivariate(std::string_view text, const FieldPtr& field) {
  require_base_field(field);
  Parser parser(text, field, true);
  return parser.parse_all();
}

ParsedRatio parse_ratio(std::string_view text, const FieldPtr& field) {
  require_base_field(field);
  Parser parser(text, field, false);
  ParsedRatio r = parser.parse_ratio_all();
  if (r.denominator.is_zero()) throw Error(Errc::division_by_zero, "zero denominator in \"" + std::string(text) + "\"");
  return r;
}

}  // namespace quadff
