#include "krull/rational.hpp"

#include "krull/errors.hpp"

namespace krull {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long multiplicity(const Integer& z, std::uint64_t p) {
  if (sgn(z) == 0) throw DomainError("multiplicity of zero");
  Integer rest = abs(z);
  const Integer pp(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t()));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  const Integer z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

}  // namespace krull
