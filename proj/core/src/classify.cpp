#include "quadff/classify.hpp"

#include "quadff/error.hpp"

namespace quadff {

std::int64_t expected_h(int q, int t) {
  const int e = (q % 2 == 0) ? t - 1 : t - 2;
  if (e < 0 || t > 40) {
    throw Error(Errc::invalid_t, "t = " + std::to_string(t) + " gives no class number for q = " + std::to_string(q));
  }
  return std::int64_t{1} << e;
}

ClassificationRecord make_record(const Curve& curve, const ZetaReport& zeta) {
  ClassificationRecord r;
  const RamificationData ram = ramified_places(curve);
  r.q = zeta.q;
  r.g = zeta.g;
  r.t = ram.t;
  r.h = zeta.h;
  r.expected_h = expected_h(r.q, r.t);
  r.exponent_two = r.h == r.expected_h;
  r.N = zeta.N;
  r.a = zeta.a;
  r.ramification = ram.degree_multiset();
  r.equation = equation_text(curve);
  return r;
}

ClassificationRecord is_exponent_two(const Curve& curve) { return make_record(curve, l_polynomial(curve)); }

}  // namespace quadff
