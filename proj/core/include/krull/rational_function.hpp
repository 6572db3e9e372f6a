#pragma once

#include <string>

#include "krull/dense_poly.hpp"

namespace krull {

/// Element of ℚ(x): a reduced fraction num/den of polynomials over ℚ.
///
/// Canonical form: gcd(num, den) = 1 and den monic. Zero is 0/1.
class UniRatFunc {
 public:
  UniRatFunc() : den_(UniPolyQ::constant(Rational(1))) {}
  UniRatFunc(std::int64_t c) : UniRatFunc(Rational(static_cast<long>(c))) {}  // NOLINT
  UniRatFunc(const Rational& c)  // NOLINT
      : num_(UniPolyQ::constant(c)), den_(UniPolyQ::constant(Rational(1))) {}
  explicit UniRatFunc(UniPolyQ polynomial)
      : num_(std::move(polynomial)), den_(UniPolyQ::constant(Rational(1))) {}

  // Reduces and normalizes; throws DomainError on a zero denominator.
  static UniRatFunc fraction(const UniPolyQ& num, const UniPolyQ& den);

  static UniRatFunc x() { return UniRatFunc(UniPolyQ::monomial(Rational(1), 1)); }

  const UniPolyQ& numerator() const noexcept { return num_; }
  const UniPolyQ& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0; }

  UniRatFunc inverse() const;

  friend UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator-(const UniRatFunc& a);
  friend UniRatFunc operator-(const UniRatFunc& a, const UniRatFunc& b) { return a + (-b); }
  friend UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b);
  friend UniRatFunc operator/(const UniRatFunc& a, const UniRatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const UniRatFunc& a, const UniRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  UniPolyQ num_;
  UniPolyQ den_;
};

inline bool is_zero(const UniRatFunc& f) { return f.is_zero(); }

struct ReducedPair {
  UniPolyQ numerator;
  UniPolyQ denominator;
};

// gcd-reduces num/den and makes the denominator monic. Idempotent.
ReducedPair reduce_frac(const UniPolyQ& num, const UniPolyQ& den);

// Text form accepted back by the parser, e.g. "1 + 4*x^4" or "(x)/(x + 1)".
std::string render_poly(const UniPolyQ& p, const char* var);
std::string to_string(const UniRatFunc& f);

}  // namespace krull
