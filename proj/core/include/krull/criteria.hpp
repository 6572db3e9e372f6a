#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "krull/value.hpp"

namespace krull {

// The criteria below read a polynomial only through its coefficient values
// v(a₀), …, v(aₙ): a span of n + 1 Values, ∞ for zero coefficients, with
// v(aₙ) finite and n ≥ 1.

/// One comparison made while checking a hypothesis.
struct TraceEntry {
  std::string hypothesis;  // "ii" or "iii"
  std::size_t index;       // i
  Value reference;         // left-hand side, e.g. v(a_k)/(j−k)
  Value scaled;            // right-hand side, e.g. v(a_i)/(j−i)
  std::strong_ordering outcome = std::strong_ordering::equal;  // lex_cmp(reference, scaled)
};

struct DivisorCheck {
  std::uint64_t d;
  bool in_dG;
};

struct IndexPair {
  std::size_t j;
  std::size_t k;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Certificate that every factorization has a factor of degree ≤ n − j + k.
struct Theorem1Report {
  std::size_t n = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t bound = 0;  // n − j + k
  bool irreducible = false;  // j = n and k = 0
  Value value_j = Value::infinity();
  Value value_k = Value::infinity();
  Value gamma = Value::infinity();  // v(a_k)/(j−k)
  std::vector<TraceEntry> trace;
  // Zero coefficients: their comparisons hold vacuously and are not traced.
  std::vector<std::size_t> vacuous_indices;
  std::vector<DivisorCheck> divisor_checks;
  // Set instead of divisor_checks by the rank-1 gcd form.
  std::optional<std::uint64_t> gcd_value;
  std::vector<IndexPair> all_valid_pairs;
  std::string selection = "strongest qualifying pair";
};

/// Certificate that every irreducible factor has degree ≥ delta_f.
struct Theorem2Report {
  std::size_t n = 0;
  std::size_t j = 0;
  std::uint64_t d1 = 0;
  std::optional<std::uint64_t> d2;  // absent when j = n
  std::uint64_t delta_f = 0;
  Value left_slope = Value::infinity();                // v(a₀)/j
  std::optional<Value> right_slope;                    // v(aₙ)/(n−j), j < n
  bool edges_convex = true;
  std::vector<TraceEntry> trace;
  std::vector<std::size_t> vacuous_indices;
};

struct Theorem2Options {
  // Require v(a₀)/j + v(aₙ)/(n−j) ≥ 0 when j < n, i.e. that the two edges
  // through (j, 0) are the lower convex hull. Without it the conclusion can
  // fail: −1/2 + z² − z⁴/2 = −(z−1)²(z+1)²/2 at p = 2 would get δ = 2.
  bool require_convex_edges = true;
};

struct NewtonSegment {
  std::size_t start;   // index of the left vertex
  std::size_t length;  // horizontal length
  Value slope;
};

struct NewtonPolygon {
  std::vector<std::pair<std::size_t, Value>> vertices;
  std::vector<NewtonSegment> segments;
};

// Every (j, k), 1 ≤ k+1 ≤ j ≤ n, satisfying the four upper-bound hypotheses.
std::vector<IndexPair> theorem1_pairs(std::span<const Value> values, const ValueGroup& group);

// Report for the pair with the smallest bound n − j + k (ties: smallest j).
std::optional<Theorem1Report> theorem1(std::span<const Value> values, const ValueGroup& group);

// Rank-1 form with gcd(v(a_k), j − k) = 1 in place of the divisor checks.
// With KRULL_CROSS_CHECK defined, also runs theorem1 and throws
// InternalError on any disagreement.
std::optional<Theorem1Report> corollary1(std::span<const Value> values, const ValueGroup& group);

// Smallest j passing the lower-bound hypotheses. Throws InapplicableError
// when a₀ = 0.
std::optional<Theorem2Report> theorem2(std::span<const Value> values, const ValueGroup& group,
                                       const Theorem2Options& options = {});

// Lower convex hull of (i, v(aᵢ)) over the nonzero coefficients.
NewtonPolygon newton_polygon(std::span<const Value> values);

// Divisors d > 1 of m in increasing order.
std::vector<std::uint64_t> divisors_above_one(std::uint64_t m);

}  // namespace krull
