#include "krull/rational_function.hpp"

#include "krull/render.hpp"

namespace krull {

ReducedPair reduce_frac(const UniPolyQ& num, const UniPolyQ& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  const UniPolyQ one = UniPolyQ::constant(Rational(1));
  if (num.is_zero()) return {UniPolyQ{}, one};
  UniPolyQ g = gcd(num, den);
  UniPolyQ n = exact_quotient(num, g);
  UniPolyQ d = exact_quotient(den, g);
  const Rational inv = Rational(1) / d.leading();
  return {inv * n, inv * d};
}

UniRatFunc UniRatFunc::fraction(const UniPolyQ& num, const UniPolyQ& den) {
  auto [n, d] = reduce_frac(num, den);
  UniRatFunc out;
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

UniRatFunc UniRatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(x)");
  return fraction(den_, num_);
}

UniRatFunc operator+(const UniRatFunc& a, const UniRatFunc& b) {
  if (a.den_ == b.den_) return UniRatFunc::fraction(a.num_ + b.num_, a.den_);
  return UniRatFunc::fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRatFunc operator-(const UniRatFunc& a) {
  UniRatFunc out = a;
  out.num_ = -a.num_;
  return out;
}

UniRatFunc operator*(const UniRatFunc& a, const UniRatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return UniRatFunc(a.num_ * b.num_);
  return UniRatFunc::fraction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string render_poly(const UniPolyQ& p, const char* var) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_zero(p[i])) continue;
    terms.emplace_back(p[i], monomial_text(var, i));
  }
  return join_signed_terms(terms);
}

std::string to_string(const UniRatFunc& f) {
  if (f.is_polynomial()) return render_poly(f.numerator(), "x");
  return "(" + render_poly(f.numerator(), "x") + ")/(" + render_poly(f.denominator(), "x") + ")";
}

}  // namespace krull
