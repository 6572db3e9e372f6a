#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "krull/errors.hpp"
#include "krull/fp.hpp"
#include "krull/rational.hpp"

namespace krull {

namespace detail {
// Dispatches to the free is_zero of a coefficient type; members named
// is_zero would otherwise hide it.
template <class C>
bool coefficient_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial a₀ + a₁t + … + aₙtⁿ over a commutative ring C.
///
/// The coefficient vector is kept trimmed: it is empty for the zero
/// polynomial and otherwise ends in a nonzero entry. C needs +, -, *, ==,
/// construction from an integer, and a free `is_zero(const C&)`.
template <class C>
class DensePoly {
 public:
  using coefficient_type = C;

  DensePoly() = default;
  explicit DensePoly(std::vector<C> coefficients) : c_(std::move(coefficients)) { trim(); }
  // Integer constant, so that nested polynomial rings satisfy the C(0)/C(1) requirement.
  explicit DensePoly(std::int64_t c) : DensePoly(std::vector<C>{C(c)}) {}

  static DensePoly constant(C c) { return DensePoly(std::vector<C>{std::move(c)}); }
  static DensePoly monomial(C c, std::size_t degree) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = std::move(c);
    return DensePoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  // No degree for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  // Degree of a polynomial known to be nonzero.
  std::size_t deg() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial");
    return c_.size() - 1;
  }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<C>& coefficients() const noexcept { return c_; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  // Lowest index with a nonzero coefficient.
  std::size_t order() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!detail::coefficient_is_zero(c_[i])) return i;
    }
    throw DomainError("order of the zero polynomial");
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<C> out(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return DensePoly(std::move(out));
  }
  friend DensePoly operator-(const DensePoly& a) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(-x);
    return DensePoly(std::move(out));
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coefficient_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        C t = a.c_[i] * b.c_[j];
        out[i + j] = out[i + j] + t;
      }
    }
    return DensePoly(std::move(out));
  }
  friend DensePoly operator*(const C& s, const DensePoly& a) {
    std::vector<C> out;
    out.reserve(a.c_.size());
    for (const auto& x : a.c_) out.push_back(s * x);
    return DensePoly(std::move(out));
  }
  DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
  DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  // Multiplies by t^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> out(k, C(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return DensePoly(std::move(out));
  }

  C evaluate(const C& t) const {
    C acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coefficient_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const DensePoly<C>& p) {
  return p.is_zero();
}

template <class C>
DensePoly<C> pow(const DensePoly<C>& base, unsigned exponent) {
  DensePoly<C> acc = DensePoly<C>::constant(C(1));
  DensePoly<C> b = base;
  while (exponent != 0) {
    if (exponent & 1U) acc = acc * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Operations that need C to be a field (Rational, Fp).

template <class K>
struct DivMod {
  DensePoly<K> quotient;
  DensePoly<K> remainder;
};

template <class K>
DivMod<K> divmod(const DensePoly<K>& a, const DensePoly<K>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero() || a.deg() < b.deg()) return {DensePoly<K>{}, a};
  std::vector<K> rem = a.coefficients();
  const std::size_t db = b.deg();
  std::vector<K> quo(a.deg() - db + 1, K(0));
  const K inv_lead = K(1) / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (is_zero(rem[i])) continue;
    K q = rem[i] * inv_lead;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      K t = q * b[j];
      rem[i - db + j] = rem[i - db + j] - t;
    }
  }
  rem.resize(db);
  return {DensePoly<K>(std::move(quo)), DensePoly<K>(std::move(rem))};
}

template <class K>
DensePoly<K> make_monic(const DensePoly<K>& a) {
  if (a.is_zero()) return a;
  const K inv = K(1) / a.leading();
  return inv * a;
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
DensePoly<K> gcd(DensePoly<K> a, DensePoly<K> b) {
  b = make_monic(b);
  while (!b.is_zero()) {
    // Monic remainders keep rational coefficients from growing.
    DensePoly<K> r = make_monic(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Quotient of a division known to be exact.
template <class K>
DensePoly<K> exact_quotient(const DensePoly<K>& a, const DensePoly<K>& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw InternalError("exact_quotient: nonzero remainder");
  return std::move(qr.quotient);
}

template <class K>
DensePoly<K> derivative(const DensePoly<K>& a) {
  if (a.size() <= 1) return {};
  std::vector<K> out;
  out.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out.push_back(K(static_cast<std::int64_t>(i)) * a[i]);
  }
  return DensePoly<K>(std::move(out));
}

using UniPolyQ = DensePoly<Rational>;
using FpPoly = DensePoly<Fp>;

}  // namespace krull
