#pragma once

#include <cstdint>
#include <string>

#include "krull/errors.hpp"

namespace krull {

// Element of a prime field F_p with the modulus carried at runtime.
//
// An Fp built from a bare integer is "unbound": it behaves as that integer
// until it meets a bound element, at which point it is reduced modulo the
// other operand's prime. This lets generic code write C(0) and C(1) without
// knowing p. Mixing two different primes throws.
class Fp {
 public:
  constexpr Fp() = default;
  constexpr Fp(std::int64_t integer) : raw_(integer) {}  // NOLINT: implicit by design of C(0)/C(1)
  Fp(std::int64_t integer, std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 32)) throw DomainError("Fp: modulus must be in [2, 2^32)");
    raw_ = reduce(integer, p);
  }

  bool bound() const noexcept { return p_ != 0; }
  std::uint64_t modulus() const noexcept { return p_; }
  // Canonical representative in [0, p) for bound elements; the raw integer otherwise.
  std::int64_t value() const noexcept { return raw_; }

  Fp bind(std::uint64_t p) const {
    if (p_ == p) return *this;
    if (p_ != 0) throw DomainError("Fp: mixing elements of different prime fields");
    return Fp(raw_, p);
  }

  Fp inverse() const;

  friend Fp operator+(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Fp(x + y);
    std::uint64_t s = static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(y);
    if (s >= p) s -= p;
    return from_canonical(s, p);
  }
  friend Fp operator-(const Fp& a) {
    if (a.p_ == 0) return Fp(-a.raw_);
    return from_canonical(a.raw_ == 0 ? 0 : a.p_ - static_cast<std::uint64_t>(a.raw_), a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    if (p == 0) return Fp(x * y);
    const std::uint64_t prod = static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(y);
    return from_canonical(prod % p, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    auto [x, y, p] = unify(a, b);
    return x == y;
  }

 private:
  // Raw representatives of two operands brought into a common field.
  struct Unified {
    std::int64_t a;
    std::int64_t b;
    std::uint64_t p;
  };

  static std::int64_t reduce(std::int64_t v, std::uint64_t p) {
    auto m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
  }
  static Fp from_canonical(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.raw_ = static_cast<std::int64_t>(v);
    r.p_ = p;
    return r;
  }
  static Unified unify(const Fp& a, const Fp& b) {
    if (a.p_ == b.p_) return {a.raw_, b.raw_, a.p_};
    if (a.p_ == 0) return {reduce(a.raw_, b.p_), b.raw_, b.p_};
    if (b.p_ == 0) return {a.raw_, reduce(b.raw_, a.p_), a.p_};
    throw DomainError("Fp: mixing elements of different prime fields");
  }

  std::int64_t raw_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }

inline Fp Fp::inverse() const {
  if (raw_ == 0) throw DomainError("Fp: inverse of zero");
  if (p_ == 0) {
    if (raw_ == 1 || raw_ == -1) return *this;
    throw DomainError("Fp: inverse of an integer outside a prime field");
  }
  // Fermat: a^(p-2).
  std::uint64_t base = static_cast<std::uint64_t>(raw_);
  std::uint64_t e = p_ - 2;
  std::uint64_t acc = 1;
  std::uint64_t b = base;
  while (e != 0) {
    if (e & 1U) acc = (acc * b) % p_;
    b = (b * b) % p_;
    e >>= 1U;
  }
  return from_canonical(acc, p_);
}

inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

}  // namespace krull
