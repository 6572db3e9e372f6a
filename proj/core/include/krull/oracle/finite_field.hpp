#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "krull/dense_poly.hpp"
#include "krull/poly.hpp"

namespace krull::oracle {

struct FactorPower {
  FpPoly factor;  // monic, irreducible over F_p
  unsigned multiplicity;
};

/// f = unit · ∏ factorᵢ^multiplicityᵢ over F_p.
struct FpFactorization {
  std::uint64_t p = 0;
  Fp unit;
  std::vector<FactorPower> factors;

  FpPoly expand() const;
};

/// Multiset of irreducible-factor degrees of f mod p.
struct DegreePattern {
  std::uint64_t p = 0;
  // (degree, multiplicity) sorted by degree; each degree appears once.
  std::vector<std::pair<std::size_t, unsigned>> degrees;

  std::size_t total_degree() const;
  // Degrees of every sub-multiset product, strictly between 0 and total_degree().
  std::vector<bool> proper_subset_sums() const;
};

FpPoly powmod(const FpPoly& base, const Integer& exponent, const FpPoly& modulus);

// Full factorization of a nonzero f ∈ F_p[z]: squarefree decomposition,
// distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
// (trace map for p = 2) driven by a generator seeded with `seed`.
FpFactorization factor_fp(const FpPoly& f, std::uint64_t p, std::uint64_t seed = 0);

DegreePattern degree_pattern(const FpFactorization& factorization);

// f mod p for f ∈ ℚ[z] whose denominators are prime to p.
FpPoly reduce_mod_p(const Poly<Rational>& f, std::uint64_t p);

// Degree pattern of f mod p. Throws DomainError when p divides the leading
// coefficient (after clearing denominators) or a denominator.
DegreePattern factor_mod_p(const Poly<Rational>& f, std::uint64_t p, std::uint64_t seed = 0);

// The primitive integer polynomial with the same roots as f ∈ ℚ[z].
Poly<Rational> primitive_integer_part(const Poly<Rational>& f);

enum class Certificate { kCertified, kInconclusive };

struct PatternResult {
  Certificate certificate = Certificate::kInconclusive;
  std::optional<std::uint64_t> witness_prime;
  std::vector<DegreePattern> patterns;  // one per usable prime
};

// Sound irreducibility certifier over ℚ: a factor of degree m over ℚ would
// reduce to a factor of degree m mod every usable prime, so when no proper
// degree survives the intersection of the patterns' subset sums, f is
// irreducible. Never certifies a reducible polynomial. Primes dividing the
// leading coefficient are skipped.
PatternResult pattern_irreducible(const Poly<Rational>& f, std::span<const std::uint64_t> primes,
                                  std::uint64_t seed = 0);

}  // namespace krull::oracle
