#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krull/dense_poly.hpp"
#include "krull/render.hpp"

namespace krull {

// K[x, y] stored recursively as a polynomial in y whose coefficients are
// polynomials in x. K is Rational or Fp.
template <class K>
using BiPoly = DensePoly<DensePoly<K>>;

namespace bivariate {

template <class K>
DensePoly<K> content_y(const BiPoly<K>& a) {
  DensePoly<K> g;
  for (const auto& c : a.coefficients()) g = krull::gcd(g, c);
  return g;
}

template <class K>
BiPoly<K> divide_inner(const BiPoly<K>& a, const DensePoly<K>& c) {
  std::vector<DensePoly<K>> out;
  out.reserve(a.size());
  for (const auto& coef : a.coefficients()) out.push_back(krull::exact_quotient(coef, c));
  return BiPoly<K>(std::move(out));
}

template <class K>
BiPoly<K> primitive_part(const BiPoly<K>& a) {
  if (a.is_zero()) return a;
  return divide_inner(a, content_y(a));
}

// lc(b)^e · a mod b in K[x][y] for some e ≥ 0.
template <class K>
BiPoly<K> pseudo_remainder(BiPoly<K> a, const BiPoly<K>& b) {
  const std::size_t db = b.deg();
  const DensePoly<K>& lc = b.leading();
  while (!a.is_zero() && a.deg() >= db) {
    const std::size_t shift = a.deg() - db;
    DensePoly<K> la = a.leading();
    a = lc * a - la * b.shifted(shift);
  }
  return a;
}

// Exact quotient a / b in K[x][y]; throws InternalError if b does not divide a.
template <class K>
BiPoly<K> exact_quotient(BiPoly<K> a, const BiPoly<K>& b) {
  if (b.is_zero()) throw DomainError("bivariate division by zero");
  BiPoly<K> q;
  const std::size_t db = b.deg();
  while (!a.is_zero()) {
    if (a.deg() < db) throw InternalError("bivariate exact_quotient: nonzero remainder");
    const std::size_t shift = a.deg() - db;
    DensePoly<K> t = krull::exact_quotient(a.leading(), b.leading());
    BiPoly<K> term = BiPoly<K>::monomial(t, shift);
    q = q + term;
    a = a - term * b;
  }
  return q;
}

// Leading coefficient in the term order that ranks y above x.
template <class K>
const K& leading_scalar(const BiPoly<K>& a) {
  return a.leading().leading();
}

// gcd in K[x, y] by content / primitive-part recursion, normalized to a
// leading scalar of 1. gcd(0, 0) = 0.
template <class K>
BiPoly<K> gcd(const BiPoly<K>& a, const BiPoly<K>& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto normalize = [](const BiPoly<K>& g) {
    const K inv = K(1) / leading_scalar(g);
    return DensePoly<K>::constant(inv) * g;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  if (a.deg() == 0 && b.deg() == 0) return BiPoly<K>::constant(krull::gcd(a[0], b[0]));
  // A unit divides everything; skip the remainder sequence.
  if ((a.deg() == 0 && a[0].deg() == 0) || (b.deg() == 0 && b[0].deg() == 0)) {
    return normalize(a.deg() == 0 && a[0].deg() == 0 ? a : b);
  }
  const DensePoly<K> c = krull::gcd(content_y(a), content_y(b));
  BiPoly<K> p = primitive_part(a);
  BiPoly<K> q = primitive_part(b);
  if (p.deg() < q.deg()) std::swap(p, q);
  while (!q.is_zero()) {
    BiPoly<K> r = pseudo_remainder(p, q);
    p = std::move(q);
    q = primitive_part(r);
  }
  return normalize(c * primitive_part(p));
}

}  // namespace bivariate

template <class K>
struct BiReducedPair {
  BiPoly<K> numerator;
  BiPoly<K> denominator;
};

// gcd-reduces num/den and scales both so the denominator's leading scalar is 1.
template <class K>
BiReducedPair<K> reduce_frac(const BiPoly<K>& num, const BiPoly<K>& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) return {BiPoly<K>{}, BiPoly<K>(std::int64_t{1})};
  const BiPoly<K> g = bivariate::gcd(num, den);
  BiPoly<K> n = bivariate::exact_quotient(num, g);
  BiPoly<K> d = bivariate::exact_quotient(den, g);
  const DensePoly<K> inv = DensePoly<K>::constant(K(1) / bivariate::leading_scalar(d));
  return {inv * n, inv * d};
}

/// Element of F(x, y) for F = ℚ or F_p, kept as a reduced fraction.
template <class K>
class BiFrac {
 public:
  BiFrac() : den_(std::int64_t{1}) {}
  BiFrac(std::int64_t c) : num_(c), den_(std::int64_t{1}) {}  // NOLINT
  explicit BiFrac(BiPoly<K> polynomial) : num_(std::move(polynomial)), den_(std::int64_t{1}) {}

  static BiFrac scalar(const K& c) { return BiFrac(BiPoly<K>::constant(DensePoly<K>::constant(c))); }
  // x^t y^s with coefficient `one` (which carries the field's prime for F_p).
  static BiFrac monomial(const K& one, std::size_t t, std::size_t s) {
    return BiFrac(BiPoly<K>::monomial(DensePoly<K>::monomial(one, t), s));
  }
  static BiFrac fraction(const BiPoly<K>& num, const BiPoly<K>& den) {
    auto [n, d] = reduce_frac(num, den);
    BiFrac out;
    out.num_ = std::move(n);
    out.den_ = std::move(d);
    return out;
  }

  const BiPoly<K>& numerator() const noexcept { return num_; }
  const BiPoly<K>& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0 && den_.leading().deg() == 0; }

  BiFrac inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in F(x,y)");
    return fraction(den_, num_);
  }

  friend BiFrac operator+(const BiFrac& a, const BiFrac& b) {
    if (a.is_polynomial() && b.is_polynomial()) return BiFrac(a.num_ + b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Only the common part g of the denominators can cancel afterwards.
    const BiPoly<K> g = bivariate::gcd(a.den_, b.den_);
    const BiPoly<K> ad = bivariate::exact_quotient(a.den_, g);
    const BiPoly<K> bd = bivariate::exact_quotient(b.den_, g);
    BiPoly<K> num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return BiFrac();
    const BiPoly<K> h = bivariate::gcd(num, g);
    return normalized(bivariate::exact_quotient(num, h), ad * bivariate::exact_quotient(b.den_, h));
  }
  friend BiFrac operator-(const BiFrac& a) {
    BiFrac out = a;
    out.num_ = -a.num_;
    return out;
  }
  friend BiFrac operator-(const BiFrac& a, const BiFrac& b) { return a + (-b); }
  friend BiFrac operator*(const BiFrac& a, const BiFrac& b) {
    if (a.is_polynomial() && b.is_polynomial()) return BiFrac(a.num_ * b.num_);
    if (a.is_zero() || b.is_zero()) return BiFrac();
    // Cross-cancel; both inputs are reduced, so the result is too.
    const BiPoly<K> g1 = bivariate::gcd(a.num_, b.den_);
    const BiPoly<K> g2 = bivariate::gcd(b.num_, a.den_);
    return normalized(bivariate::exact_quotient(a.num_, g1) * bivariate::exact_quotient(b.num_, g2),
                      bivariate::exact_quotient(a.den_, g2) * bivariate::exact_quotient(b.den_, g1));
  }
  friend BiFrac operator/(const BiFrac& a, const BiFrac& b) { return a * b.inverse(); }
  friend bool operator==(const BiFrac& a, const BiFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  // Coprime num/den: only the denominator's leading scalar needs fixing.
  static BiFrac normalized(BiPoly<K> num, BiPoly<K> den) {
    const DensePoly<K> inv = DensePoly<K>::constant(K(1) / bivariate::leading_scalar(den));
    BiFrac out;
    out.num_ = inv * num;
    out.den_ = inv * den;
    return out;
  }

  BiPoly<K> num_;
  BiPoly<K> den_;
};

template <class K>
bool is_zero(const BiFrac<K>& f) {
  return f.is_zero();
}

inline Rational scalar_as_rational(const Rational& q) { return q; }
inline Rational scalar_as_rational(const Fp& a) { return Rational(static_cast<long>(a.value())); }

// Terms ordered by y-degree, then x-degree, e.g. "y + x^2*y - 3*x*y^2".
template <class K>
std::string render_bipoly(const BiPoly<K>& a) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (std::size_t s = 0; s < a.size(); ++s) {
    const auto& inner = a[s];
    for (std::size_t t = 0; t < inner.size(); ++t) {
      if (is_zero(inner[t])) continue;
      std::string mono = monomial_text("x", t);
      std::string ys = monomial_text("y", s);
      if (!mono.empty() && !ys.empty()) mono += "*";
      mono += ys;
      terms.emplace_back(scalar_as_rational(inner[t]), std::move(mono));
    }
  }
  return join_signed_terms(terms);
}

template <class K>
std::string to_string(const BiFrac<K>& f) {
  if (f.is_polynomial()) return render_bipoly(f.numerator());
  return "(" + render_bipoly(f.numerator()) + ")/(" + render_bipoly(f.denominator()) + ")";
}

using BiFracQ = BiFrac<Rational>;
using BiFracFp = BiFrac<Fp>;

}  // namespace krull
