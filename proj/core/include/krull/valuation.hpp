#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "krull/bivariate.hpp"
#include "krull/parser.hpp"
#include "krull/poly.hpp"
#include "krull/rational_function.hpp"
#include "krull/value.hpp"

namespace krull {

// ---------------------------------------------------------------------------
// Building blocks.

// Exponent of p in q as a rank-1 value; ∞ for q = 0.
Value vp_rational(std::uint64_t p, const Rational& q);

// min v_p over the nonzero coefficients of f ≠ 0.
long gauss_vp(std::uint64_t p, const UniPolyQ& f);

// (f / p^gauss_vp(f)) reduced coefficient-wise into F_p[x]; nonzero for f ≠ 0.
FpPoly residue_mod_p(std::uint64_t p, const UniPolyQ& f);

// Degree valuation on F_p(x): deg(den) − deg(num), so v(x) = −1.
long deg_val(const FpPoly& num, const FpPoly& den);
long deg_val(const FpPoly& g);

// ---------------------------------------------------------------------------
// Valuations. Each is an immutable function object mapping a coefficient to
// a Value of fixed rank, with value group ℤ^rank.

/// p-adic valuation on ℚ (rank 1).
class PAdicValuation {
 public:
  using coefficient_type = Rational;

  explicit PAdicValuation(std::uint64_t p);

  Value operator()(const Rational& c) const { return vp_rational(p_, c); }
  std::uint64_t prime() const noexcept { return p_; }
  std::size_t rank() const noexcept { return 1; }
  ValueGroup group() const { return ValueGroup(1); }
  std::string spec() const { return "p-adic:" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

/// Rank-2 valuation on ℚ(x): f ↦ (v_p(f), v_∞(f̄)) for polynomials,
/// extended to fractions by v(f/g) = v(f) − v(g).
class QxRank2Valuation {
 public:
  using coefficient_type = UniRatFunc;

  explicit QxRank2Valuation(std::uint64_t p);

  Value operator()(const UniRatFunc& c) const;
  // On an arbitrary (not necessarily reduced) polynomial.
  Value of_polynomial(const UniPolyQ& f) const;

  std::uint64_t prime() const noexcept { return p_; }
  std::size_t rank() const noexcept { return 2; }
  ValueGroup group() const { return ValueGroup(2); }
  std::string spec() const { return "qx-rank2:" + std::to_string(p_); }

 private:
  std::uint64_t p_;
};

/// Lexicographic monomial valuation on F(x, y): the least exponent pair
/// (t, s) of x^t y^s with a nonzero coefficient, extended to fractions.
class MonomialLexValuation {
 public:
  template <class K>
  Value operator()(const BiFrac<K>& c) const {
    if (c.is_zero()) return Value::infinity();
    return of_polynomial(c.numerator()) - of_polynomial(c.denominator());
  }

  template <class K>
  Value of_polynomial(const BiPoly<K>& f) const {
    if (f.is_zero()) return Value::infinity();
    // f = Σ_s c_s(x) y^s; the least t is the least x-order over all c_s,
    // then the least s attaining it.
    std::size_t best_t = 0;
    std::size_t best_s = 0;
    bool found = false;
    for (std::size_t s = 0; s < f.size(); ++s) {
      if (f[s].is_zero()) continue;
      const std::size_t t = f[s].order();
      if (!found || t < best_t) {
        best_t = t;
        best_s = s;
        found = true;
      }
    }
    return Value{Rational(static_cast<long>(best_t)), Rational(static_cast<long>(best_s))};
  }

  std::size_t rank() const noexcept { return 2; }
  ValueGroup group() const { return ValueGroup(2); }
  std::string spec() const { return "monomial-lex"; }
};

// ---------------------------------------------------------------------------
// Valuation spec strings: "p-adic:<p>", "qx-rank2:<p>", "monomial-lex".

enum class ValuationKind { kPAdic, kQxRank2, kMonomialLex };

struct ValuationSpec {
  ValuationKind kind = ValuationKind::kPAdic;
  std::uint64_t prime = 0;

  static ValuationSpec parse(std::string_view text);
  std::string to_string() const;
  // Throws ConfigError unless this valuation is defined on `domain`.
  void check_compatible(const DomainTag& domain) const;
  // The domain a harness should sample from for this valuation.
  DomainTag default_domain() const;

  friend bool operator==(const ValuationSpec&, const ValuationSpec&) = default;
};

// ---------------------------------------------------------------------------
// Gauss extension w(Σ αᵢ zⁱ) = min_i { v(αᵢ) + i·γ }.

struct ExtendedValue {
  Value value;
  std::size_t index;  // smallest i attaining the minimum
};

// On precomputed coefficient values (∞ for zero coefficients).
ExtendedValue gauss_extend_values(const std::vector<Value>& coefficient_values, const Value& gamma);

template <class C, class V>
std::vector<Value> coefficient_values(const V& v, const Poly<C>& f) {
  std::vector<Value> out;
  out.reserve(f.size());
  for (const auto& c : f.coefficients()) out.push_back(v(c));
  return out;
}

template <class C, class V>
ExtendedValue gauss_extend(const V& v, const Value& gamma, const Poly<C>& f) {
  if (f.is_zero()) throw DomainError("gauss_extend of the zero polynomial");
  return gauss_extend_values(coefficient_values(v, f), gamma);
}

}  // namespace krull
