#include "krull/oracle/finite_field.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "krull/errors.hpp"

namespace krull::oracle {

namespace {

FpPoly one(std::uint64_t p) { return FpPoly::constant(Fp(1, p)); }
FpPoly var(std::uint64_t p) { return FpPoly::monomial(Fp(1, p), 1); }

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return divmod(a * b, m).remainder; }

// g(z)^(1/p) for g with g' = 0: coefficients of z^{ip} move to z^i
// (Frobenius is the identity on F_p).
FpPoly pth_root(const FpPoly& g, std::uint64_t p) {
  std::vector<Fp> out;
  for (std::size_t i = 0; i < g.size(); i += p) out.push_back(g[i]);
  return FpPoly(std::move(out));
}

void squarefree(const FpPoly& f, std::uint64_t p, unsigned scale,
                std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.deg() == 0) return;
  const FpPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree(pth_root(f, p), p, scale * static_cast<unsigned>(p), out);
    return;
  }
  FpPoly c = gcd(f, df);
  FpPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.deg() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly fac = exact_quotient(w, y);
    if (fac.deg() > 0) out.emplace_back(make_monic(fac), i * scale);
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (c.deg() > 0) squarefree(pth_root(c, p), p, scale * static_cast<unsigned>(p), out);
}

// Splits a squarefree monic g into products of irreducibles of equal degree.
std::vector<std::pair<FpPoly, std::size_t>> distinct_degree(FpPoly g, std::uint64_t p) {
  std::vector<std::pair<FpPoly, std::size_t>> out;
  const FpPoly x = var(p);
  FpPoly h = divmod(x, g).remainder;
  const Integer pz(static_cast<unsigned long>(p));
  std::size_t d = 1;
  while (g.deg() >= 2 * d) {
    h = powmod(h, pz, g);
    FpPoly t = gcd(g, h - x);
    if (t.deg() > 0) {
      g = exact_quotient(g, t);
      h = divmod(h, g).remainder;
      out.emplace_back(std::move(t), d);
    }
    ++d;
  }
  if (g.deg() > 0) {
    const std::size_t dg = g.deg();
    out.emplace_back(std::move(g), dg);
  }
  return out;
}

FpPoly random_below(std::size_t degree, std::uint64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  std::vector<Fp> c;
  c.reserve(degree);
  for (std::size_t i = 0; i < degree; ++i) c.emplace_back(static_cast<std::int64_t>(dist(rng)), p);
  return FpPoly(std::move(c));
}

void equal_degree(const FpPoly& g, std::size_t d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
  const std::size_t n = g.deg();
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer half;  // (p^d − 1)/2 for odd p
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, d);
    half = (half - 1) / 2;
  }
  for (;;) {
    FpPoly a = random_below(n, p, rng);
    if (a.is_zero() || a.deg() == 0) continue;
    FpPoly b;
    if (p == 2) {
      // Tr(a) = a + a² + … + a^(2^(d−1)) mod g.
      FpPoly term = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        term = mulmod(term, term, g);
        b = b + term;
      }
    } else {
      b = powmod(a, half, g) - one(p);
    }
    FpPoly t = gcd(g, b);
    if (t.is_zero() || t.deg() == 0 || t.deg() == n) continue;
    equal_degree(t, d, p, rng, out);
    equal_degree(exact_quotient(g, t), d, p, rng, out);
    return;
  }
}

}  // namespace

FpPoly FpFactorization::expand() const {
  FpPoly acc = FpPoly::constant(unit);
  for (const auto& f : factors) acc = acc * pow(f.factor, f.multiplicity);
  return acc;
}

std::size_t DegreePattern::total_degree() const {
  std::size_t total = 0;
  for (const auto& [d, m] : degrees) total += d * m;
  return total;
}

std::vector<bool> DegreePattern::proper_subset_sums() const {
  const std::size_t n = total_degree();
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (const auto& [d, m] : degrees) {
    for (unsigned rep = 0; rep < m; ++rep) {
      for (std::size_t s = n; s >= d; --s) {
        if (reach[s - d]) reach[s] = true;
        if (s == d) break;
      }
    }
  }
  reach[0] = false;
  reach[n] = false;
  return reach;
}

FpPoly powmod(const FpPoly& base, const Integer& exponent, const FpPoly& modulus) {
  if (sgn(exponent) < 0) throw DomainError("powmod: negative exponent");
  const std::uint64_t p = modulus.leading().modulus();
  FpPoly acc = divmod(FpPoly::constant(Fp(1, p)), modulus).remainder;
  FpPoly b = divmod(base, modulus).remainder;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) acc = mulmod(acc, b, modulus);
  }
  return acc;
}

FpFactorization factor_fp(const FpPoly& f, std::uint64_t p, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("factor_fp: zero polynomial");
  if (!is_prime(p)) throw DomainError("factor_fp: modulus is not prime");
  FpFactorization out;
  out.p = p;
  out.unit = f.leading().bind(p);
  const FpPoly monic = make_monic(FpPoly::constant(Fp(1, p)) * f);
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree(monic, p, 1, sqf);
  std::mt19937_64 rng(seed);
  for (auto& [g, mult] : sqf) {
    for (auto& [block, d] : distinct_degree(g, p)) {
      std::vector<FpPoly> pieces;
      equal_degree(block, d, p, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({make_monic(piece), mult});
    }
  }
  // Merge equal factors that surfaced from different squarefree layers.
  std::vector<FactorPower> merged;
  for (auto& fp : out.factors) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const FactorPower& m) { return m.factor == fp.factor; });
    if (it != merged.end()) {
      it->multiplicity += fp.multiplicity;
    } else {
      merged.push_back(std::move(fp));
    }
  }
  std::sort(merged.begin(), merged.end(), [](const FactorPower& a, const FactorPower& b) {
    return a.factor.deg() < b.factor.deg();
  });
  out.factors = std::move(merged);
  return out;
}

DegreePattern degree_pattern(const FpFactorization& factorization) {
  std::map<std::size_t, unsigned> counts;
  for (const auto& f : factorization.factors) counts[f.factor.deg()] += f.multiplicity;
  DegreePattern out;
  out.p = factorization.p;
  out.degrees.assign(counts.begin(), counts.end());
  return out;
}

FpPoly reduce_mod_p(const Poly<Rational>& f, std::uint64_t p) {
  const Integer pz(static_cast<unsigned long>(p));
  std::vector<Fp> out;
  out.reserve(f.size());
  for (const auto& c : f.coefficients()) {
    const Integer d = c.get_den() % pz;
    if (sgn(d) == 0) throw DomainError("reduce_mod_p: denominator divisible by p");
    Integer n = c.get_num() % pz;
    out.push_back(Fp(n.get_si(), p) / Fp(d.get_si(), p));
  }
  return FpPoly(std::move(out));
}

Poly<Rational> primitive_integer_part(const Poly<Rational>& f) {
  if (f.is_zero()) throw DomainError("primitive_integer_part of zero");
  Integer l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : f.coefficients()) {
    Rational s = c * Rational(l);
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
  }
  if (sgn(f.leading()) < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& z : ints) out.emplace_back(Integer(z / g));
  return Poly<Rational>(std::move(out));
}

DegreePattern factor_mod_p(const Poly<Rational>& f, std::uint64_t p, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
  const FpPoly r = reduce_mod_p(f, p);
  if (r.is_zero() || r.deg() != f.deg()) {
    throw DomainError("factor_mod_p: leading coefficient vanishes mod " + std::to_string(p));
  }
  return degree_pattern(factor_fp(r, p, seed));
}

PatternResult pattern_irreducible(const Poly<Rational>& f, std::span<const std::uint64_t> primes,
                                  std::uint64_t seed) {
  if (primes.empty()) throw DomainError("pattern_irreducible: empty prime list");
  if (f.is_zero()) throw DomainError("pattern_irreducible: zero polynomial");
  PatternResult out;
  const std::size_t n = f.deg();
  if (n == 0) return out;
  if (n == 1) {
    out.certificate = Certificate::kCertified;
    return out;
  }
  const Poly<Rational> g = primitive_integer_part(f);
  std::vector<bool> possible(n + 1, true);
  possible[0] = false;
  possible[n] = false;
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw DomainError("pattern_irreducible: " + std::to_string(p) + " is not prime");
    if (mpz_divisible_ui_p(g.leading().get_num_mpz_t(), p)) continue;
    DegreePattern pat = factor_mod_p(g, p, seed);
    const auto sums = pat.proper_subset_sums();
    bool any = false;
    for (std::size_t m = 1; m < n; ++m) {
      possible[m] = possible[m] && sums[m];
      any = any || possible[m];
    }
    out.patterns.push_back(std::move(pat));
    if (!any) {
      out.certificate = Certificate::kCertified;
      out.witness_prime = p;
      return out;
    }
  }
  return out;
}

}  // namespace krull::oracle
