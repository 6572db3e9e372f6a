#include "krull/value.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "krull/errors.hpp"

namespace krull {

namespace {

void require_same_rank(const Value& a, const Value& b, const char* op) {
  if (a.rank() != b.rank()) {
    throw RankMismatch(std::string(op) + ": rank " + std::to_string(a.rank()) + " vs rank " +
                       std::to_string(b.rank()));
  }
}

void require_group_rank(const Value& a, const ValueGroup& g) {
  if (a.is_infinite()) throw DomainError("value group membership of infinity");
  if (a.rank() != g.rank()) {
    throw RankMismatch("value of rank " + std::to_string(a.rank()) + " tested against a rank " +
                       std::to_string(g.rank()) + " group");
  }
}

}  // namespace

Value Value::zero(std::size_t rank) {
  if (rank == 0) throw DomainError("value rank must be positive");
  return Value(std::vector<Rational>(rank, Rational(0)));
}

Value::Value(std::vector<Rational> components) : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("finite value needs at least one component");
  for (auto& c : components_) c.canonicalize();
}

Value::Value(std::initializer_list<Rational> components)
    : Value(std::vector<Rational>(components)) {}

bool Value::is_zero() const {
  if (is_infinite()) return false;
  for (const auto& c : components_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::string Value::to_string() const {
  if (is_infinite()) return "inf";
  if (rank() == 1) return krull::to_string(components_[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i != 0) os << ", ";
    os << krull::to_string(components_[i]);
  }
  os << ')';
  return os.str();
}

std::strong_ordering lex_cmp(const Value& a, const Value& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  require_same_rank(a, b, "lex_cmp");
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Value value_add(const Value& a, const Value& b) {
  if (a.is_infinite() || b.is_infinite()) return Value::infinity();
  require_same_rank(a, b, "value_add");
  std::vector<Rational> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] + b[i];
  return Value(std::move(out));
}

Value value_sub(const Value& a, const Value& b) {
  if (b.is_infinite()) throw DomainError("value_sub: subtracting infinity");
  if (a.is_infinite()) return Value::infinity();
  require_same_rank(a, b, "value_sub");
  std::vector<Rational> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] - b[i];
  return Value(std::move(out));
}

Value operator-(const Value& a) {
  if (a.is_infinite()) throw DomainError("negating infinity");
  std::vector<Rational> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = -a[i];
  return Value(std::move(out));
}

Value scale(const Value& a, const Rational& q) {
  if (a.is_infinite()) {
    if (sgn(q) <= 0) throw DomainError("scale: infinity by a non-positive rational");
    return Value::infinity();
  }
  std::vector<Rational> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out[i] = a[i] * q;
  return Value(std::move(out));
}

ValueGroup::ValueGroup(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw DomainError("value group rank must be positive");
}

bool ValueGroup::contains(const Value& g) const {
  if (g.is_infinite()) return false;  // v(0) is not a group element
  require_group_rank(g, *this);
  for (const auto& c : g.components()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool in_dG(const Value& a, std::uint64_t d, const ValueGroup& g) {
  if (d == 0) throw DomainError("in_dG: d must be positive");
  require_group_rank(a, g);
  const Integer dd(static_cast<unsigned long>(d));
  for (const auto& c : a.components()) {
    if (c.get_den() != 1) return false;
    if (!mpz_divisible_p(c.get_num_mpz_t(), dd.get_mpz_t())) return false;
  }
  return true;
}

std::uint64_t min_multiplier(const Value& a, const ValueGroup& g) {
  require_group_rank(a, g);
  Integer l = 1;
  for (const auto& c : a.components()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!l.fits_ulong_p()) throw DomainError("min_multiplier: result exceeds 64 bits");
  return l.get_ui();
}

std::string to_string(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

}  // namespace krull
