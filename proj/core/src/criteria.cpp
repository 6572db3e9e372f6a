#include "krull/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "krull/errors.hpp"

namespace krull {

namespace {

Rational inverse_of(long m) { return Rational(1, 1) / Rational(m); }

// Checks the polynomial-shape preconditions shared by every criterion.
std::size_t validated_degree(std::span<const Value> values, const ValueGroup& group) {
  if (values.empty()) throw DomainError("criteria: zero polynomial");
  if (values.back().is_infinite()) throw DomainError("criteria: leading coefficient is zero");
  if (values.size() < 2) throw DomainError("criteria: polynomial must have degree >= 1");
  for (const auto& v : values) {
    if (v.is_finite() && v.rank() != group.rank()) {
      throw RankMismatch("criteria: coefficient value rank differs from the value group rank");
    }
  }
  return values.size() - 1;
}

struct ShapeCheck {
  bool ok = true;
  std::vector<TraceEntry> trace;
  std::vector<std::size_t> vacuous;
};

// Hypotheses (ii) and (iii) of the upper-bound criterion for a fixed (j, k):
// γ = v(a_k)/(j−k) is strictly below v(a_i)/(j−i) for i < j, i ≠ k, and
// strictly above it for i > j. Stops at the first failure unless `full`.
ShapeCheck check_edge(std::span<const Value> values, std::size_t j, std::size_t k, bool full) {
  const std::size_t n = values.size() - 1;
  const Value gamma = scale(values[k], inverse_of(static_cast<long>(j - k)));
  ShapeCheck out;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == k || i == j) continue;
    if (i > j && j == n) break;
    if (values[i].is_infinite()) {
      out.vacuous.push_back(i);
      continue;
    }
    const long denom = static_cast<long>(j) - static_cast<long>(i);
    Value scaled = scale(values[i], inverse_of(denom));
    const auto outcome = lex_cmp(gamma, scaled);
    const bool pass = i < j ? outcome < 0 : outcome > 0;
    if (full) out.trace.push_back({i < j ? "ii" : "iii", i, gamma, std::move(scaled), outcome});
    if (!pass) {
      out.ok = false;
      if (!full) return out;
    }
  }
  return out;
}

bool passes_divisor_test(const Value& vk, std::uint64_t m, const ValueGroup& group) {
  for (std::uint64_t d : divisors_above_one(m)) {
    if (in_dG(vk, d, group)) return false;
  }
  return true;
}

std::uint64_t gcd_with(const Value& vk, std::uint64_t m) {
  const Rational& c = vk[0];
  if (c.get_den() != 1) throw DomainError("corollary1: value is not in the value group Z");
  Integer g;
  const Integer mm(static_cast<unsigned long>(m));
  mpz_gcd(g.get_mpz_t(), c.get_num_mpz_t(), mm.get_mpz_t());
  return g.get_ui();
}

enum class FourthHypothesis { kDivisors, kGcd };

std::vector<IndexPair> valid_pairs(std::span<const Value> values, const ValueGroup& group,
                                   FourthHypothesis form) {
  const std::size_t n = validated_degree(values, group);
  std::vector<IndexPair> pairs;
  for (std::size_t j = 1; j <= n; ++j) {
    if (!values[j].is_zero()) continue;
    for (std::size_t k = 0; k < j; ++k) {
      if (values[k].is_infinite()) continue;
      if (!check_edge(values, j, k, false).ok) continue;
      const std::uint64_t m = j - k;
      const bool fourth = form == FourthHypothesis::kDivisors
                              ? passes_divisor_test(values[k], m, group)
                              : gcd_with(values[k], m) == 1;
      if (fourth) pairs.push_back({j, k});
    }
  }
  return pairs;
}

std::optional<Theorem1Report> build_report(std::span<const Value> values, const ValueGroup& group,
                                           std::vector<IndexPair> pairs, FourthHypothesis form) {
  if (pairs.empty()) return std::nullopt;
  const std::size_t n = values.size() - 1;
  const auto best = *std::min_element(pairs.begin(), pairs.end(), [n](const IndexPair& a, const IndexPair& b) {
    const std::size_t ba = n - a.j + a.k;
    const std::size_t bb = n - b.j + b.k;
    return ba != bb ? ba < bb : a.j < b.j;
  });
  Theorem1Report r;
  r.n = n;
  r.j = best.j;
  r.k = best.k;
  r.bound = n - best.j + best.k;
  r.irreducible = best.j == n && best.k == 0;
  r.value_j = values[best.j];
  r.value_k = values[best.k];
  r.gamma = scale(values[best.k], inverse_of(static_cast<long>(best.j - best.k)));
  ShapeCheck shape = check_edge(values, best.j, best.k, true);
  if (!shape.ok) throw InternalError("theorem1: selected pair fails its own trace");
  r.trace = std::move(shape.trace);
  r.vacuous_indices = std::move(shape.vacuous);
  const std::uint64_t m = best.j - best.k;
  if (form == FourthHypothesis::kDivisors) {
    for (std::uint64_t d : divisors_above_one(m)) r.divisor_checks.push_back({d, in_dG(r.value_k, d, group)});
  } else {
    r.gcd_value = gcd_with(r.value_k, m);
  }
  r.all_valid_pairs = std::move(pairs);
  return r;
}

}  // namespace

std::vector<std::uint64_t> divisors_above_one(std::uint64_t m) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  std::erase(small, 1);
  return small;
}

std::vector<IndexPair> theorem1_pairs(std::span<const Value> values, const ValueGroup& group) {
  return valid_pairs(values, group, FourthHypothesis::kDivisors);
}

std::optional<Theorem1Report> theorem1(std::span<const Value> values, const ValueGroup& group) {
  return build_report(values, group, theorem1_pairs(values, group), FourthHypothesis::kDivisors);
}

std::optional<Theorem1Report> corollary1(std::span<const Value> values, const ValueGroup& group) {
  if (group.rank() != 1) throw DomainError("corollary1 needs a rank-1 valuation");
  auto pairs = valid_pairs(values, group, FourthHypothesis::kGcd);
  auto report = build_report(values, group, std::move(pairs), FourthHypothesis::kGcd);
#ifdef KRULL_CROSS_CHECK
  const auto general = theorem1(values, group);
  const bool agree = report.has_value() == general.has_value() &&
                     (!report || (report->j == general->j && report->k == general->k &&
                                  report->all_valid_pairs == general->all_valid_pairs));
  if (!agree) throw InternalError("corollary1 and theorem1 disagree");
#endif
  return report;
}

std::optional<Theorem2Report> theorem2(std::span<const Value> values, const ValueGroup& group,
                                       const Theorem2Options& options) {
  const std::size_t n = validated_degree(values, group);
  if (values[0].is_infinite()) throw InapplicableError("a0 = 0: v(a0)/j is not finite");
  for (std::size_t j = 1; j <= n; ++j) {
    if (!values[j].is_zero()) continue;
    Theorem2Report r;
    r.n = n;
    r.j = j;
    r.left_slope = scale(values[0], inverse_of(static_cast<long>(j)));
    bool ok = true;
    for (std::size_t i = 0; i < j && ok; ++i) {
      if (values[i].is_infinite()) {
        r.vacuous_indices.push_back(i);
        continue;
      }
      Value scaled = scale(values[i], inverse_of(static_cast<long>(j - i)));
      const auto outcome = lex_cmp(r.left_slope, scaled);
      ok = outcome <= 0;
      r.trace.push_back({"ii", i, r.left_slope, std::move(scaled), outcome});
    }
    if (ok && j < n) {
      r.right_slope = scale(values[n], inverse_of(static_cast<long>(n - j)));
      for (std::size_t i = j + 1; i < n && ok; ++i) {
        if (values[i].is_infinite()) {
          r.vacuous_indices.push_back(i);
          continue;
        }
        Value scaled = scale(values[i], inverse_of(static_cast<long>(i - j)));
        const auto outcome = lex_cmp(*r.right_slope, scaled);
        ok = outcome <= 0;
        r.trace.push_back({"iii", i, *r.right_slope, std::move(scaled), outcome});
      }
      if (ok) {
        r.edges_convex = lex_cmp(r.left_slope + *r.right_slope, Value::zero(group.rank())) >= 0;
        if (options.require_convex_edges && !r.edges_convex) ok = false;
      }
    }
    if (!ok) continue;

    r.d1 = min_multiplier(r.left_slope, group);
    if (r.d1 > j) throw InternalError("theorem2: d1 exceeds j");
    r.delta_f = r.d1;
    if (j < n) {
      r.d2 = min_multiplier(*r.right_slope, group);
      if (*r.d2 > n - j) throw InternalError("theorem2: d2 exceeds n - j");
      r.delta_f = std::min(r.d1, *r.d2);
    }
    return r;
  }
  return std::nullopt;
}

NewtonPolygon newton_polygon(std::span<const Value> values) {
  if (values.empty()) throw DomainError("newton_polygon: zero polynomial");
  std::vector<std::pair<std::size_t, Value>> hull;
  // B is dropped when slope(A, B) ≥ slope(A, C), i.e.
  // (v_B − v_A)(i_C − i_A) ≥ (v_C − v_A)(i_B − i_A); both multipliers are positive.
  auto not_convex = [](const auto& a, const auto& b, const auto& c) {
    const Value lhs = scale(b.second - a.second, Rational(static_cast<long>(c.first - a.first)));
    const Value rhs = scale(c.second - a.second, Rational(static_cast<long>(b.first - a.first)));
    return lex_cmp(lhs, rhs) >= 0;
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_infinite()) continue;
    std::pair<std::size_t, Value> p{i, values[i]};
    while (hull.size() >= 2 && not_convex(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
    hull.push_back(std::move(p));
  }
  if (hull.empty()) throw DomainError("newton_polygon: zero polynomial");
  NewtonPolygon out;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto& [ia, va] = hull[s];
    const auto& [ib, vb] = hull[s + 1];
    const std::size_t len = ib - ia;
    out.segments.push_back({ia, len, scale(vb - va, inverse_of(static_cast<long>(len)))});
  }
  out.vertices = std::move(hull);
  return out;
}

}  // namespace krull
