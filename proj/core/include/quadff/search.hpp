#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadff/classify.hpp"
#include "quadff/curve.hpp"

namespace quadff {

/// Totally ordered encoding of an isomorphism-class representative.
using CanonicalKey = std::vector<std::uint32_t>;

struct SearchOptions {
  unsigned jobs = 1;           // 0 = hardware concurrency
  bool strict_gamma = false;   // also enumerate odd pole orders > 1 (char 2)
  std::string cache_dir;       // empty disables the cache
  int shift_slack = 0;         // extra degree allowed for shifts in canonicalize
};

/// Every valid curve over F_q of genus g whose ramification count t gives
/// expected_h(q, t) = h, in a fixed order. Throws Errc::infeasible_pair when
/// (q, g) is not in feasible_cases(h) and Errc::unsupported_h.
std::vector<Curve> enumerate_candidates(int q, int g, std::int64_t h, bool strict_gamma = false);

/// Minimum key over x -> a x + b with y -> lambda y (odd q), or with the
/// shifts u -> u + w^2 + w followed by Hasse reduction (q even). Shifts have
/// denominator prod p_i^{(order_i - 1)/2} and numerator degree up to
/// g + deg(denominator) + shift_slack.
CanonicalKey canonicalize(const Curve& curve, int shift_slack = 0);

/// Curves obtained by x -> r + 1/x for every rational ramified place x = r,
/// which trades that place with the infinite one. Isomorphic to the input as
/// function fields, but not over k(x) with infinity fixed.
std::vector<Curve> infinity_moves(const Curve& curve);

/// Minimum of canonicalize over the curve and its infinity_moves.
CanonicalKey canonicalize_moving_infinity(const Curve& curve, int shift_slack = 0);

struct CollisionReport {
  CanonicalKey first;
  CanonicalKey second;
  std::string first_equation;
  std::string second_equation;
  bool merged_by_wider_shifts = false;
  bool merged_by_moving_infinity = false;
};

struct SearchStats {
  std::size_t candidates = 0;
  std::size_t accepted = 0;
  std::size_t zeta_failures = 0;      // candidates violating a zeta invariant
  std::size_t record_failures = 0;    // accepted records violating N_1 <= h, h <= 32, table membership
  std::vector<std::string> failure_samples;
  std::vector<CollisionReport> collisions;
  bool from_cache = false;
};

struct SearchResult {
  int q = 0;
  int g = 0;
  std::int64_t h = 0;
  std::vector<CanonicalKey> keys;              // sorted
  std::vector<ClassificationRecord> classes;   // one per key
  SearchStats stats;
};

SearchResult search(int q, int g, std::int64_t h, const SearchOptions& options = {});

struct ClassificationTable {
  std::vector<SearchResult> runs;  // every feasible (q, g, h), h ascending
  std::size_t class_count() const;
};

ClassificationTable full_classification(const SearchOptions& options = {});

/// Default cache directory: $QUADFF_CACHE_DIR, else $XDG_CACHE_HOME/quadff,
/// else $HOME/.cache/quadff; empty when none is set.
std::string default_cache_dir();

}  // namespace quadff
