#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace krull {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

// Exponent of p in |z|, z != 0.
long multiplicity(const Integer& z, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace krull
