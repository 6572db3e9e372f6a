#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "krull/poly.hpp"
#include "krull/value.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline krull::Rational rational(Rng& rng, long height = 40) {
  if (uniform(rng, 0, 9) == 0) return 0;
  return krull::Rational(uniform(rng, -height, height)) / krull::Rational(uniform(rng, 1, height));
}

inline krull::Rational nonzero_rational(Rng& rng, long height = 40) {
  krull::Rational q = 0;
  while (q == 0) q = rational(rng, height);
  return q;
}

inline krull::UniPolyQ uni_poly(Rng& rng, std::size_t max_deg, long height = 12) {
  std::vector<krull::Rational> c(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_deg))) + 1);
  for (auto& x : c) x = uniform(rng, 0, 2) == 0 ? krull::Rational(0) : krull::Rational(uniform(rng, -height, height));
  return krull::UniPolyQ(std::move(c));
}

inline krull::UniRatFunc uni_ratfunc(Rng& rng) {
  if (uniform(rng, 0, 9) == 0) return krull::UniRatFunc(0);
  krull::UniPolyQ num = uni_poly(rng, 3);
  krull::UniPolyQ den = uni_poly(rng, 2);
  while (den.is_zero()) den = uni_poly(rng, 2);
  return krull::UniRatFunc::fraction(num, den);
}

template <class K>
K scalar(Rng& rng, std::uint64_t p, long height = 9) {
  if constexpr (std::is_same_v<K, krull::Fp>) {
    return krull::Fp(uniform(rng, 0, static_cast<long>(p) - 1), p);
  } else {
    return krull::Rational(uniform(rng, -height, height));
  }
}

template <class K>
krull::BiPoly<K> bi_poly(Rng& rng, std::uint64_t p) {
  krull::BiPoly<K> f;
  const long terms = uniform(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    const K c = scalar<K>(rng, p);
    K one;
    if constexpr (std::is_same_v<K, krull::Fp>) {
      one = krull::Fp(1, p);
    } else {
      one = 1;
    }
    const auto x = static_cast<std::size_t>(uniform(rng, 0, 2));
    const auto y = static_cast<std::size_t>(uniform(rng, 0, 2));
    f = f + krull::BiPoly<K>::monomial(krull::DensePoly<K>::monomial(c * one, x), y);
  }
  return f;
}

template <class K>
krull::BiFrac<K> bi_frac(Rng& rng, std::uint64_t p) {
  krull::BiPoly<K> num = bi_poly<K>(rng, p);
  if (uniform(rng, 0, 2) != 0) return krull::BiFrac<K>(num);
  krull::BiPoly<K> den = bi_poly<K>(rng, p);
  while (den.is_zero()) den = bi_poly<K>(rng, p);
  return krull::BiFrac<K>::fraction(num, den);
}

// Small polynomial in z with coefficients from `coef`, degree in [1, max_deg].
template <class C, class Gen>
krull::Poly<C> z_poly(Rng& rng, std::size_t max_deg, Gen coef) {
  const auto d = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_deg)));
  std::vector<C> c(d + 1);
  for (auto& x : c) x = coef(rng);
  while (krull::is_zero(c[d])) c[d] = coef(rng);
  return krull::Poly<C>(std::move(c));
}

// Random rank-r value vectors as integers, ∞ marked by nullopt-like empty
// vectors; v[n] is finite.
inline std::vector<std::vector<long long>> int_values(Rng& rng, std::size_t n, std::size_t rank, long lo, long hi,
                                                      int zero_percent = 10) {
  std::vector<std::vector<long long>> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i < n && uniform(rng, 0, 99) < zero_percent) continue;
    out[i].resize(rank);
    for (auto& c : out[i]) c = uniform(rng, lo, hi);
  }
  return out;
}

// As int_values with degree 1..8 and v = 0 planted at one or two indices in
// 1..n, so the upper-bound search has something to find. at_top plants at n.
inline std::vector<std::vector<long long>> planted_values(Rng& rng, std::size_t rank, bool at_top) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
  auto v = int_values(rng, n, rank, -3, 6);
  const auto j = at_top ? n : static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
  v[j].assign(rank, 0);
  if (uniform(rng, 0, 3) == 0) v[static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)))].assign(rank, 0);
  return v;
}

inline std::vector<krull::Value> to_values(const std::vector<std::vector<long long>>& iv) {
  std::vector<krull::Value> out;
  for (const auto& v : iv) {
    if (v.empty()) {
      out.push_back(krull::Value::infinity());
      continue;
    }
    std::vector<krull::Rational> c;
    for (long long x : v) c.emplace_back(static_cast<long>(x));
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace testgen
