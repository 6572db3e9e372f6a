#include "krull/valuation.hpp"

#include <limits>

#include "krull/errors.hpp"

namespace krull {

namespace {

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) throw ConfigError(std::string(who) + ": " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw ConfigError(std::string(who) + ": prime must be below 2^31");
}

long vp(std::uint64_t p, const Rational& q) {
  return multiplicity(q.get_num(), p) - multiplicity(q.get_den(), p);
}

Fp reduce_mod_p(const Rational& q, std::uint64_t p) {
  const Integer pz(static_cast<unsigned long>(p));
  const Integer n = q.get_num() % pz;
  const Integer d = q.get_den() % pz;
  if (sgn(d) == 0) throw DomainError("denominator divisible by p");
  return Fp(n.get_si(), p) / Fp(d.get_si(), p);
}

}  // namespace

Value vp_rational(std::uint64_t p, const Rational& q) {
  if (is_zero(q)) return Value::infinity();
  return Value{Rational(vp(p, q))};
}

long gauss_vp(std::uint64_t p, const UniPolyQ& f) {
  if (f.is_zero()) throw DomainError("gauss_vp of the zero polynomial");
  long best = std::numeric_limits<long>::max();
  for (const auto& c : f.coefficients()) {
    if (is_zero(c)) continue;
    best = std::min(best, vp(p, c));
  }
  return best;
}

FpPoly residue_mod_p(std::uint64_t p, const UniPolyQ& f) {
  const long m = gauss_vp(p, f);
  Rational shift = 1;
  const Rational pq(static_cast<long>(p));
  for (long i = 0; i < (m < 0 ? -m : m); ++i) shift *= pq;
  if (m > 0) shift = 1 / shift;
  std::vector<Fp> out;
  out.reserve(f.size());
  for (const auto& c : f.coefficients()) {
    const Rational scaled = c * shift;
    out.push_back(reduce_mod_p(scaled, p));
  }
  FpPoly r(std::move(out));
  if (r.is_zero()) throw InternalError("residue_mod_p produced zero");
  return r;
}

long deg_val(const FpPoly& num, const FpPoly& den) {
  if (num.is_zero()) throw DomainError("deg_val of zero");
  return static_cast<long>(den.deg()) - static_cast<long>(num.deg());
}

long deg_val(const FpPoly& g) { return deg_val(g, FpPoly(std::int64_t{1})); }

PAdicValuation::PAdicValuation(std::uint64_t p) : p_(p) { require_prime(p, "p-adic"); }

QxRank2Valuation::QxRank2Valuation(std::uint64_t p) : p_(p) { require_prime(p, "qx-rank2"); }

Value QxRank2Valuation::of_polynomial(const UniPolyQ& f) const {
  if (f.is_zero()) return Value::infinity();
  return Value{Rational(gauss_vp(p_, f)), Rational(deg_val(residue_mod_p(p_, f)))};
}

Value QxRank2Valuation::operator()(const UniRatFunc& c) const {
  if (c.is_zero()) return Value::infinity();
  return of_polynomial(c.numerator()) - of_polynomial(c.denominator());
}

ValuationSpec ValuationSpec::parse(std::string_view text) {
  const std::string s(text);
  auto prime_after = [&](std::string_view prefix) -> std::uint64_t {
    const std::string digits = s.substr(prefix.size());
    if (digits.empty() || digits.size() > 10 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("valuation '" + s + "': expected a prime after '" + std::string(prefix) + "'");
    }
    const std::uint64_t p = std::stoull(digits);
    require_prime(p, "valuation");
    return p;
  };
  if (s == "monomial-lex") return {ValuationKind::kMonomialLex, 0};
  if (s.rfind("p-adic:", 0) == 0) return {ValuationKind::kPAdic, prime_after("p-adic:")};
  if (s.rfind("qx-rank2:", 0) == 0) return {ValuationKind::kQxRank2, prime_after("qx-rank2:")};
  throw ConfigError("unknown valuation '" + s +
                    "' (expected p-adic:<p>, qx-rank2:<p> or monomial-lex)");
}

std::string ValuationSpec::to_string() const {
  switch (kind) {
    case ValuationKind::kPAdic:
      return "p-adic:" + std::to_string(prime);
    case ValuationKind::kQxRank2:
      return "qx-rank2:" + std::to_string(prime);
    case ValuationKind::kMonomialLex:
      return "monomial-lex";
  }
  return "?";
}

void ValuationSpec::check_compatible(const DomainTag& domain) const {
  bool ok = false;
  switch (kind) {
    case ValuationKind::kPAdic:
      ok = domain.kind == DomainKind::kRational;
      break;
    case ValuationKind::kQxRank2:
      ok = domain.kind == DomainKind::kRationalFunction;
      break;
    case ValuationKind::kMonomialLex:
      ok = domain.kind == DomainKind::kBivariateRational || domain.kind == DomainKind::kBivariatePrime;
      break;
  }
  if (!ok) {
    throw ConfigError("valuation " + to_string() + " is not defined on domain " + domain.to_string());
  }
}

DomainTag ValuationSpec::default_domain() const {
  switch (kind) {
    case ValuationKind::kPAdic:
      return {DomainKind::kRational, 0};
    case ValuationKind::kQxRank2:
      return {DomainKind::kRationalFunction, 0};
    case ValuationKind::kMonomialLex:
      return {DomainKind::kBivariateRational, 0};
  }
  return {};
}

ExtendedValue gauss_extend_values(const std::vector<Value>& coefficient_values, const Value& gamma) {
  if (gamma.is_infinite()) throw DomainError("gauss_extend: gamma must be finite");
  std::optional<ExtendedValue> best;
  for (std::size_t i = 0; i < coefficient_values.size(); ++i) {
    const Value& vi = coefficient_values[i];
    if (vi.is_infinite()) continue;
    Value term = vi + scale(gamma, Rational(static_cast<long>(i)));
    if (!best || lex_cmp(term, best->value) < 0) best = ExtendedValue{std::move(term), i};
  }
  if (!best) throw DomainError("gauss_extend of the zero polynomial");
  return *best;
}

}  // namespace krull
