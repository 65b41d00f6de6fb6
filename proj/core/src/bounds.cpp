#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>

#include "quadff/classify.hpp"
#include "quadff/error.hpp"

namespace quadff {

namespace {

using boost::multiprecision::cpp_int;
using Float = boost::multiprecision::cpp_bin_float_100;

cpp_int ipow(int b, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// sign(A + B sqrt(q)) for integers A, B and q > 0.
int sign_with_root(const cpp_int& A, const cpp_int& B, int q) {
  const int sa = A.sign();
  const int sb = B.sign();
  if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  const cpp_int a2 = A * A;
  const cpp_int b2q = B * B * q;
  if (a2 == b2q) return 0;
  // The term with the larger square wins.
  return (a2 > b2q) ? sa : sb;
}

int log2_exact(std::int64_t h) {
  int e = 0;
  while ((std::int64_t{1} << e) < h) ++e;
  return e;
}

std::int64_t count_irreducibles(int q, int d) {
  std::int64_t sum = 0;
  for (int f = 1; f <= d; ++f) {
    if (d % f) continue;
    std::int64_t qf = 1;
    for (int i = 0; i < f; ++i) qf *= q;
    sum += moebius(d / f) * qf;
  }
  return sum / d;
}

void require_h(std::int64_t h) {
  if (!is_supported_h(h)) throw Error(Errc::unsupported_h, "h = " + std::to_string(h) + " is not one of 2, 4, 8, 16, 32");
}

}  // namespace

SBound s_bound(int q, int g, std::int64_t h_target) {
  if (q < 2 || g < 1) throw Error(Errc::invalid_argument, "s_bound needs q >= 2, g >= 1");
  // S = A - B sqrt(q)
  const cpp_int qg = ipow(q, g);
  const cpp_int A = cpp_int(q - 1) * (ipow(q, 2 * g - 1) + 1) - cpp_int(h_target) * (qg - 1) * (2 * g - 1);
  const cpp_int B = cpp_int(q - 1) * 2 * g * ipow(q, g - 1);
  SBound out;
  out.sign = sign_with_root(A, -B, q);
  const Float value = Float(A) - Float(B) * boost::multiprecision::sqrt(Float(q));
  out.value = value.str(60, std::ios_base::fmtflags(0));
  out.approx = static_cast<double>(value);
  return out;
}

bool is_supported_h(std::int64_t h) noexcept { return h == 2 || h == 4 || h == 8 || h == 16 || h == 32; }

std::vector<std::pair<int, int>> feasible_cases(std::int64_t h) {
  require_h(h);
  auto range = [](std::vector<std::pair<int, int>>& v, int q, int lo, int hi) {
    for (int g = lo; g <= hi; ++g) v.emplace_back(q, g);
  };
  std::vector<std::pair<int, int>> v;
  switch (h) {
    case 2:
      range(v, 4, 1, 1);
      range(v, 5, 1, 1);
      range(v, 3, 1, 2);
      range(v, 2, 1, 5);
      break;
    case 4:
      range(v, 5, 1, 1);
      range(v, 7, 1, 1);
      range(v, 9, 1, 1);
      range(v, 4, 1, 2);
      range(v, 3, 1, 3);
      range(v, 2, 2, 6);
      break;
    case 8:
      range(v, 5, 1, 2);
      range(v, 3, 1, 4);
      range(v, 2, 4, 8);
      break;
    case 16:
      range(v, 5, 1, 2);
      range(v, 3, 1, 4);
      range(v, 2, 7, 8);
      break;
    case 32:
      range(v, 3, 1, 4);
      break;
  }
  return v;
}

bool is_feasible(int q, int g, std::int64_t h) {
  if (!is_supported_h(h)) return false;
  const auto v = feasible_cases(h);
  return std::find(v.begin(), v.end(), std::make_pair(q, g)) != v.end();
}

const std::map<int, int>& genus_envelope() {
  static const std::map<int, int> env{{2, 8}, {3, 4}, {4, 2}, {5, 2}, {7, 1}, {9, 1}};
  return env;
}

bool in_envelope(int q, int g) {
  const auto& env = genus_envelope();
  const auto it = env.find(q);
  return it != env.end() && g >= 1 && g <= it->second;
}

const std::map<int, int>& s_bound_exclusions(std::int64_t h) {
  static const std::map<std::int64_t, std::map<int, int>> table{
      {2, {{2, 6}, {3, 3}, {4, 2}, {5, 2}}},
      {4, {{2, 7}, {3, 4}, {4, 3}, {5, 2}, {7, 2}, {8, 2}, {9, 2}}},
      {8, {{2, 9}, {3, 5}, {4, 4}, {5, 3}, {7, 2}, {8, 2}, {9, 2}, {11, 2}, {13, 2}}},
      {16, {{2, 10}, {3, 5}, {4, 4}, {5, 3}, {7, 3}, {8, 3}, {9, 2}, {11, 2}, {13, 2}, {16, 2}, {17, 2},
            {19, 2}, {23, 2}, {25, 2}}},
      {32, {{2, 11}, {3, 6}, {4, 5}, {5, 4}, {7, 3}, {8, 3}, {9, 3}, {11, 2}, {13, 2}, {16, 2}, {17, 2},
            {19, 2}, {23, 2}, {25, 2}, {27, 2}, {29, 2}, {31, 2}, {32, 2}, {37, 2}, {41, 2}, {43, 2}}},
  };
  require_h(h);
  return table.at(h);
}

int min_degree_sum(int q, int k) {
  int sum = 0;
  for (int d = 1; k > 0; ++d) {
    const std::int64_t take = std::min<std::int64_t>(k, count_irreducibles(q, d));
    sum += static_cast<int>(take) * d;
    k -= static_cast<int>(take);
  }
  return sum;
}

std::string exclusion_reason(int q, int g, std::int64_t h) {
  require_h(h);
  // (sqrt(q) - 1)^{2g} = A + B sqrt(q)
  cpp_int A = 1, B = 0;
  for (int i = 0; i < 2 * g; ++i) {
    const cpp_int nA = -A + B * q;
    const cpp_int nB = A - B;
    A = nA;
    B = nB;
  }
  if (sign_with_root(A - h, B, q) > 0) return "lower-bound";
  if (s_bound(q, g, h).sign > 0) return "s-bound";
  const bool even = q % 2 == 0;
  const int ramified = log2_exact(h) + (even ? 0 : 1);  // finite ramified places
  const int need = min_degree_sum(q, ramified);
  if (even ? 2 * need >= 2 * g + 1 : need > 2 * g + 1) return "degree-budget";
  return "";
}

std::vector<FeasibilityIssue> validate_feasible_cases(std::int64_t h) {
  std::vector<FeasibilityIssue> issues;
  for (const auto& [q, gmax] : genus_envelope()) {
    for (int g = 1; g <= gmax; ++g) {
      if (is_feasible(q, g, h)) continue;
      if (exclusion_reason(q, g, h).empty()) issues.push_back({q, g, "excluded without a bound or budget argument"});
    }
  }
  return issues;
}

}  // namespace quadff
