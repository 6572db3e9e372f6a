#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "krull/poly.hpp"

namespace krull {

enum class DomainKind {
  kRational,            // "Q"
  kRationalFunction,    // "Q(x)"
  kBivariateRational,   // "F(x,y):Q"
  kBivariatePrime,      // "F(x,y):p=<prime>"
};

/// Which coefficient domain a polynomial in z lives over.
struct DomainTag {
  DomainKind kind = DomainKind::kRational;
  std::uint64_t prime = 0;  // only for kBivariatePrime

  // Throws ConfigError on unknown tags or a non-prime modulus.
  static DomainTag parse(std::string_view text);
  std::string to_string() const;

  bool allows_x() const { return kind != DomainKind::kRational; }
  bool allows_y() const {
    return kind == DomainKind::kBivariateRational || kind == DomainKind::kBivariatePrime;
  }

  friend bool operator==(const DomainTag&, const DomainTag&) = default;
};

/// Parses a polynomial in z.
///
/// Grammar (whitespace-insensitive):
///
///     expr   := term (('+' | '-') term)*
///     term   := unary (('*' | '/') unary)*
///     unary  := ('+' | '-') unary | power
///     power  := atom ('^' integer)?
///     atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
///
/// Multiplication must be explicit. A divisor must not involve z, which
/// covers rational literals such as 3/4. Errors are ParseError with the
/// 1-based column of the offending token.
template <class C>
Poly<C> parse_poly(std::string_view text, const DomainTag& tag);

extern template Poly<Rational> parse_poly<Rational>(std::string_view, const DomainTag&);
extern template Poly<UniRatFunc> parse_poly<UniRatFunc>(std::string_view, const DomainTag&);
extern template Poly<BiFracQ> parse_poly<BiFracQ>(std::string_view, const DomainTag&);
extern template Poly<BiFracFp> parse_poly<BiFracFp>(std::string_view, const DomainTag&);

}  // namespace krull
