#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadff/curve.hpp"
#include "quadff/zeta.hpp"

namespace quadff {

struct ClassificationRecord {
  int q = 0;
  int g = 0;
  int t = 0;
  std::int64_t h = 0;
  std::int64_t expected_h = 0;
  bool exponent_two = false;
  std::vector<std::int64_t> N;
  std::vector<std::int64_t> a;
  std::vector<int> ramification;  // sorted place degrees, infinity included
  std::string equation;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

/// 2^{t-1} for even q, 2^{t-2} for odd q. Throws Errc::invalid_t when the
/// exponent would be negative or t > 40.
std::int64_t expected_h(int q, int t);

ClassificationRecord is_exponent_two(const Curve& curve);
/// Same, reusing an already computed report.
ClassificationRecord make_record(const Curve& curve, const ZetaReport& zeta);

/// S(q,g) = (q-1)(q^{2g-1} + 1 - 2g q^{(2g-1)/2}) - h (q^g - 1)(2g - 1),
/// written A - B sqrt(q). The sign is decided exactly; value carries 60
/// significant digits.
struct SBound {
  int sign = 0;
  std::string value;
  double approx = 0;
};
SBound s_bound(int q, int g, std::int64_t h_target);

/// Supported class numbers: 2, 4, 8, 16, 32.
bool is_supported_h(std::int64_t h) noexcept;

/// The (q, g) pairs left open for each class number, as a fixed table.
/// Throws Errc::unsupported_h.
std::vector<std::pair<int, int>> feasible_cases(std::int64_t h);
bool is_feasible(int q, int g, std::int64_t h);

/// Largest genus allowed for each q by the general exponent-two envelope;
/// q outside the map is excluded.
const std::map<int, int>& genus_envelope();
bool in_envelope(int q, int g);

/// For each h, q -> smallest g from which s_bound(q, g, h) is claimed
/// positive (all larger g up to 11 included).
const std::map<int, int>& s_bound_exclusions(std::int64_t h);

/// Smallest total degree of k distinct monic irreducibles over F_q.
int min_degree_sum(int q, int k);

/// Why (q, g) is absent from feasible_cases(h): "lower-bound", "s-bound",
/// "degree-budget", or "" when no argument applies.
std::string exclusion_reason(int q, int g, std::int64_t h);

struct FeasibilityIssue {
  int q;
  int g;
  std::string problem;
};
/// Checks every envelope pair outside the table has an exclusion reason.
std::vector<FeasibilityIssue> validate_feasible_cases(std::int64_t h);

}  // namespace quadff
