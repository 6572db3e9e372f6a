#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "krull/rational.hpp"

namespace krull {

/// An element of ℚʳ ∪ {∞} under the lexicographic (dictionary) order.
///
/// Finite values carry r ≥ 1 exact rational components. ∞ has no rank and
/// is strictly greater than every finite value. Values are immutable.
class Value {
 public:
  static Value infinity() { return Value(); }
  static Value zero(std::size_t rank);

  explicit Value(std::vector<Rational> components);
  Value(std::initializer_list<Rational> components);

  bool is_infinite() const noexcept { return components_.empty(); }
  bool is_finite() const noexcept { return !components_.empty(); }
  // 0 for ∞.
  std::size_t rank() const noexcept { return components_.size(); }
  const std::vector<Rational>& components() const noexcept { return components_; }
  const Rational& operator[](std::size_t i) const { return components_.at(i); }

  bool is_zero() const;

  // "(a, b)" for rank ≥ 2, "a" for rank 1, "inf" for ∞.
  std::string to_string() const;

 private:
  Value() = default;
  std::vector<Rational> components_;
};

// Throws RankMismatch when both are finite with different ranks.
std::strong_ordering lex_cmp(const Value& a, const Value& b);

inline bool operator==(const Value& a, const Value& b) { return lex_cmp(a, b) == 0; }
inline std::strong_ordering operator<=>(const Value& a, const Value& b) { return lex_cmp(a, b); }

// Component-wise; ∞ absorbs.
Value value_add(const Value& a, const Value& b);
// ∞ − finite = ∞. finite − ∞ and ∞ − ∞ throw DomainError.
Value value_sub(const Value& a, const Value& b);
Value operator-(const Value& a);

inline Value operator+(const Value& a, const Value& b) { return value_add(a, b); }
inline Value operator-(const Value& a, const Value& b) { return value_sub(a, b); }

// Component-wise multiplication by q. ∞ scaled by q > 0 stays ∞; by q ≤ 0 throws.
Value scale(const Value& a, const Rational& q);

/// A value group. The only lattice built in is ℤʳ.
class ValueGroup {
 public:
  explicit ValueGroup(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  bool contains(const Value& g) const;

 private:
  std::size_t rank_;
};

// True iff a ∈ d·G, i.e. every component of a is an integer divisible by d.
bool in_dG(const Value& a, std::uint64_t d, const ValueGroup& g);

// Least d ≥ 1 with d·a ∈ G: the lcm of the reduced component denominators.
std::uint64_t min_multiplier(const Value& a, const ValueGroup& g);

std::string to_string(std::strong_ordering o);

}  // namespace krull
