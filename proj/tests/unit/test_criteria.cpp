#include <set>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "doctest.h"
#include "krull/analysis.hpp"
#include "krull/errors.hpp"

using namespace krull;

namespace {

const DomainTag kQ = DomainTag::parse("Q");
const DomainTag kQx = DomainTag::parse("Q(x)");
const DomainTag kFQ = DomainTag::parse("F(x,y):Q");

std::vector<Value> values_q(const std::string& f, std::uint64_t p) {
  return coefficient_values(PAdicValuation(p), parse_poly<Rational>(f, kQ));
}
std::vector<Value> values_p1() {
  return coefficient_values(QxRank2Valuation(2), parse_poly<UniRatFunc>(fixtures::kP1, kQx));
}
std::vector<Value> values_lex(const std::string& f) {
  return coefficient_values(MonomialLexValuation{}, parse_poly<BiFracQ>(f, kFQ));
}

bool contains(const std::vector<IndexPair>& pairs, std::size_t j, std::size_t k) {
  return std::find(pairs.begin(), pairs.end(), IndexPair{j, k}) != pairs.end();
}

Rational q(long n, long d = 1) { return Rational(n) / Rational(d); }

// Independent rank-r version of the upper-bound hypotheses by integer
// cross-multiplication.
std::set<std::pair<std::size_t, std::size_t>> reference_pairs(const std::vector<oracle_ref::IVec>& v) {
  using oracle_ref::is_inf;
  using oracle_ref::lex_less;
  using oracle_ref::mul;
  std::set<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = v.size() - 1;
  for (std::size_t j = 1; j <= n; ++j) {
    if (is_inf(v[j]) || std::any_of(v[j].begin(), v[j].end(), [](long long c) { return c != 0; })) continue;
    for (std::size_t k = 0; k < j; ++k) {
      if (is_inf(v[k])) continue;
      const auto jk = static_cast<long long>(j - k);
      bool ok = true;
      for (std::size_t i = 0; i <= n && ok; ++i) {
        if (i == k || i == j || is_inf(v[i])) continue;
        const long long ji = static_cast<long long>(j) - static_cast<long long>(i);
        // v_k/(j−k) < v_i/(j−i) for i < j, and > for i > j; multiplying by
        // (j−k)(j−i) flips the second, so both read v_k·(j−i) < v_i·(j−k).
        ok = lex_less(mul(v[k], ji), mul(v[i], jk));
      }
      for (long long d = 2; d <= jk && ok; ++d) {
        if (jk % d == 0 && oracle_ref::divisible(v[k], d)) ok = false;
      }
      if (ok) out.emplace(j, k);
    }
  }
  return out;
}

// Lower hull vertices by brute force: an index is dropped when it lies on
// or above a chord between two other finite points around it.
std::vector<std::size_t> brute_hull(const std::vector<Value>& v) {
  std::vector<std::size_t> pts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_finite()) pts.push_back(i);
  }
  std::vector<std::size_t> out;
  for (std::size_t b : pts) {
    bool vertex = true;
    for (std::size_t a : pts) {
      for (std::size_t c : pts) {
        if (!(a < b && b < c) || !vertex) continue;
        // (c−a)·v_b ≥ (c−b)·v_a + (b−a)·v_c
        const Value lhs = scale(v[b], Rational(static_cast<long>(c - a)));
        const Value rhs = scale(v[a], Rational(static_cast<long>(c - b))) + scale(v[c], Rational(static_cast<long>(b - a)));
        if (lex_cmp(lhs, rhs) >= 0) vertex = false;
      }
    }
    if (vertex) out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("theorem1_pairs examples") {
    CHECK(contains(theorem1_pairs(values_p1(), ValueGroup(2)), 5, 0));
    CHECK(contains(theorem1_pairs(values_lex(fixtures::kP2), ValueGroup(2)), 6, 1));
    CHECK(theorem1_pairs(values_q("z^2 - 1", 2), ValueGroup(1)).empty());
  }

  TEST_CASE("theorem1 on P1") {
    const auto r = theorem1(values_p1(), ValueGroup(2));
    REQUIRE(r);
    CHECK(r->n == 6);
    CHECK(r->j == 5);
    CHECK(r->k == 0);
    CHECK(r->bound == 1);
    CHECK_FALSE(r->irreducible);
    CHECK(r->value_j == Value{0, 0});
    CHECK(r->value_k == Value{0, -1});
    CHECK(r->gamma == Value{0, q(-1, 5)});
    REQUIRE(r->divisor_checks.size() == 1);
    CHECK(r->divisor_checks[0].d == 5);
    CHECK_FALSE(r->divisor_checks[0].in_dG);
    // (iii) at i = 6: (0,−1/5) > (−2, 0).
    const auto& last = r->trace.back();
    CHECK(last.hypothesis == "iii");
    CHECK(last.index == 6);
    CHECK(last.scaled == Value{-2, 0});
    CHECK(last.outcome > 0);
    CHECK(r->selection == "strongest qualifying pair");
  }

  TEST_CASE("theorem1 on P2") {
    const auto r = theorem1(values_lex(fixtures::kP2), ValueGroup(2));
    REQUIRE(r);
    CHECK(r->n == 7);
    CHECK(r->j == 6);
    CHECK(r->k == 1);
    CHECK(r->bound == 2);
    CHECK(r->value_k == Value{0, 1});
    CHECK(r->all_valid_pairs == std::vector<IndexPair>{{6, 1}});
    for (const auto& c : r->divisor_checks) CHECK_FALSE(c.in_dG);
  }

  TEST_CASE("theorem1 classical cases") {
    const auto r = theorem1(values_q("z^2 + 2*z + 2", 2), ValueGroup(1));
    REQUIRE(r);
    CHECK(r->j == 2);
    CHECK(r->k == 0);
    CHECK(r->bound == 0);
    CHECK(r->irreducible);
    CHECK_FALSE(theorem1(values_q("z^2 - 1", 2), ValueGroup(1)));
    CHECK_THROWS_AS((theorem1(std::vector<Value>{}, ValueGroup(1))), DomainError);
  }

  TEST_CASE("corollary1 examples") {
    const auto a = corollary1(values_q("z^2 + 2*z + 2", 2), ValueGroup(1));
    REQUIRE(a);
    CHECK(a->irreducible);
    CHECK(a->gcd_value == 1u);
    const auto b = corollary1(values_q("z^5 - 3", 3), ValueGroup(1));
    REQUIRE(b);
    CHECK(b->j == 5);
    CHECK(b->k == 0);
    CHECK(b->irreducible);
    const auto c = corollary1(values_q("z^6 + 4*z^5 + 2", 2), ValueGroup(1));
    REQUIRE(c);
    CHECK(c->j == 6);
    CHECK(c->k == 0);
    CHECK(c->gcd_value == 1u);
    CHECK_THROWS_AS(corollary1(values_p1(), ValueGroup(2)), DomainError);
  }

  TEST_CASE("theorem2 examples") {
    const auto r = theorem2(values_lex(fixtures::kP3), ValueGroup(2));
    REQUIRE(r);
    CHECK(r->j == 2);
    CHECK(r->d1 == 2);
    CHECK(r->d2 == 2u);
    CHECK(r->delta_f == 2);
    CHECK(r->left_slope == Value{0, q(1, 2)});
    CHECK(*r->right_slope == Value{q(1, 2), q(1, 2)});

    const auto e = theorem2(values_q("z^2 + 2*z + 2", 2), ValueGroup(1));
    REQUIRE(e);
    CHECK(e->j == 2);
    CHECK(e->d1 == 2);
    CHECK_FALSE(e->d2);
    CHECK(e->delta_f == 2);

    const auto c = theorem2(values_q("z^3 + 4", 2), ValueGroup(1));
    REQUIRE(c);
    CHECK(c->j == 3);
    CHECK(c->left_slope == Value{q(2, 3)});
    CHECK(c->d1 == 3);
    CHECK(c->delta_f == 3);

    CHECK_THROWS_AS(theorem2(values_q("z^3 + z", 2), ValueGroup(1)), InapplicableError);
  }

  TEST_CASE("theorem2 on P1 only gives 1") {
    const auto r = theorem2(values_p1(), ValueGroup(2));
    REQUIRE(r);
    CHECK(r->j == 5);
    CHECK(r->d1 == 5);
    CHECK(r->d2 == 1u);
    CHECK(r->delta_f == 1);
  }

  TEST_CASE("convexity guard rejects a reducible quartic") {
    // −1/2 + z² − z⁴/2 = −(z − 1)²(z + 1)²/2 has linear factors.
    const auto v = values_q("-1/2 + z^2 - 1/2*z^4", 2);
    Theorem2Options literal;
    literal.require_convex_edges = false;
    const auto lit = theorem2(v, ValueGroup(1), literal);
    REQUIRE(lit);
    CHECK(lit->delta_f == 2);
    CHECK_FALSE(lit->edges_convex);
    CHECK_FALSE(theorem2(v, ValueGroup(1)));
    const auto expanded = parse_poly<Rational>("-1/2*(z - 1)^2*(z + 1)^2", kQ);
    CHECK(expanded == parse_poly<Rational>("-1/2 + z^2 - 1/2*z^4", kQ));
  }

  TEST_CASE("newton_polygon examples") {
    const auto a = newton_polygon(values_q("z^5 + 2", 2));
    REQUIRE(a.vertices.size() == 2);
    CHECK(a.vertices[0].first == 0);
    CHECK(a.vertices[0].second == Value{1});
    CHECK(a.vertices[1].first == 5);
    REQUIRE(a.segments.size() == 1);
    CHECK(a.segments[0].slope == Value{q(-1, 5)});
    CHECK(a.segments[0].length == 5);

    const auto b = newton_polygon(std::vector<Value>{Value{2}, Value{0}, Value{0}});
    REQUIRE(b.vertices.size() == 3);
    CHECK(b.segments[0].slope == Value{-2});
    CHECK(b.segments[1].slope == Value{0});

    const auto c = newton_polygon(values_lex(fixtures::kP3));
    REQUIRE(c.vertices.size() == 3);
    CHECK(c.vertices[0] == std::pair<std::size_t, Value>{0, Value{0, 1}});
    CHECK(c.vertices[1] == std::pair<std::size_t, Value>{2, Value{0, 0}});
    CHECK(c.vertices[2] == std::pair<std::size_t, Value>{4, Value{1, 1}});
    CHECK(c.segments[0].slope == Value{0, q(-1, 2)});
    CHECK(c.segments[1].slope == Value{q(1, 2), q(1, 2)});
  }

  TEST_CASE("analyze verdicts") {
    const auto r1 = analyze_expression(fixtures::kP1, kQx, ValuationSpec::parse("qx-rank2:2"));
    CHECK(r1.verdict.to_string() == "TwoFactorBound(1)");
    const auto r2 = analyze_expression(fixtures::kP2, kFQ, ValuationSpec::parse("monomial-lex"));
    CHECK(r2.verdict.to_string() == "TwoFactorBound(2)");
    const auto r3 = analyze_expression(fixtures::kP3, kFQ, ValuationSpec::parse("monomial-lex"));
    CHECK(r3.verdict.to_string() == "MinFactorDegree(2)");
    const auto r4 = analyze_expression("z^2 - 1", kQ, ValuationSpec::parse("p-adic:2"));
    CHECK(r4.verdict.kind == VerdictKind::kInconclusive);
    const auto r5 = analyze_expression("z^2 + 2*z + 2", kQ, ValuationSpec::parse("p-adic:2"));
    CHECK(r5.verdict.kind == VerdictKind::kIrreducible);
    CHECK(r5.corollary1_agrees == true);
    const auto r6 = analyze_expression("z^3 + 2*z^2", kQ, ValuationSpec::parse("p-adic:2"));
    CHECK(r6.theorem2_status == Theorem2Status::kInapplicable);
    AnalyzeOptions strip;
    strip.strip_z0 = true;
    const auto r7 = analyze_expression("z^3 + 2*z^2", kQ, ValuationSpec::parse("p-adic:2"), strip);
    CHECK(r7.stripped_z_power == 2);
    CHECK(r7.degree == 1);
    CHECK(r7.verdict.kind == VerdictKind::kIrreducible);
  }

  TEST_CASE("verdict assembly") {
    Theorem1Report t1;
    t1.bound = 1;
    Theorem2Report t2;
    t2.delta_f = 2;
    CHECK(assemble_verdict(6, t1, std::nullopt).to_string() == "TwoFactorBound(1)");
    CHECK(assemble_verdict(6, std::nullopt, t2).to_string() == "MinFactorDegree(2)");
    t1.bound = 2;
    t2.delta_f = 2;
    CHECK(assemble_verdict(8, t1, t2).to_string() == "Both(2,2)");
    t2.delta_f = 3;
    CHECK(assemble_verdict(8, t1, t2).to_string() == "Irreducible");
    t2.delta_f = 5;
    CHECK(assemble_verdict(8, std::nullopt, t2).to_string() == "Irreducible");
    t2.delta_f = 1;
    CHECK(assemble_verdict(8, std::nullopt, t2).to_string() == "Inconclusive");
  }

  TEST_CASE("upper-bound pairs match an independent cross-multiplied check") {
    testgen::Rng rng(101);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t rank = t % 2 ? 2 : 1;
      const auto iv = testgen::planted_values(rng, rank, false);
      const auto pairs = theorem1_pairs(testgen::to_values(iv), ValueGroup(rank));
      std::set<std::pair<std::size_t, std::size_t>> got;
      for (const auto& p : pairs) got.emplace(p.j, p.k);
      CHECK(got == reference_pairs(iv));
    }
  }

  TEST_CASE("gcd form agrees with divisor form on rank-1 inputs") {
    testgen::Rng rng(202);
    int hits = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto v = testgen::to_values(testgen::planted_values(rng, 1, t % 3 == 0));
      const auto a = theorem1(v, ValueGroup(1));
      const auto b = corollary1(v, ValueGroup(1));
      REQUIRE(a.has_value() == b.has_value());
      if (!a) continue;
      ++hits;
      CHECK(a->j == b->j);
      CHECK(a->k == b->k);
      CHECK(a->all_valid_pairs == b->all_valid_pairs);
    }
    CHECK(hits > 100);
  }

  TEST_CASE("j = n pairs match the single-segment checker") {
    testgen::Rng rng(303);
    int hits = 0;
    for (int t = 0; t < 500; ++t) {
      const std::size_t rank = t % 2 ? 2 : 1;
      const auto iv = testgen::planted_values(rng, rank, true);
      const std::size_t n = iv.size() - 1;
      std::optional<std::size_t> from_engine;
      for (const auto& p : theorem1_pairs(testgen::to_values(iv), ValueGroup(rank))) {
        if (p.j == n) {
          CHECK_FALSE(from_engine);
          from_engine = p.k;
        }
      }
      CHECK(from_engine == oracle_ref::classical_k(iv));
      if (from_engine) ++hits;
    }
    CHECK(hits > 50);
  }

  TEST_CASE("reports satisfy their invariants and traces replay") {
    testgen::Rng rng(404);
    for (int t = 0; t < 500; ++t) {
      const std::size_t rank = t % 2 ? 2 : 1;
      const auto v = testgen::to_values(testgen::planted_values(rng, rank, t % 4 == 0));
      const ValueGroup g(rank);
      if (const auto r = theorem1(v, g)) {
        CHECK(r->bound == r->n - r->j + r->k);
        CHECK(r->irreducible == (r->bound == 0));
        for (const auto& c : r->divisor_checks) CHECK_FALSE(c.in_dG);
        for (const auto& e : r->trace) {
          CHECK(lex_cmp(e.reference, e.scaled) == e.outcome);
          CHECK(e.scaled == scale(v[e.index], Rational(1) / Rational(static_cast<long>(r->j) - static_cast<long>(e.index))));
          CHECK((e.index < r->j ? e.outcome < 0 : e.outcome > 0));
        }
        std::size_t covered = r->trace.size() + r->vacuous_indices.size();
        CHECK(covered == r->n - 1);
        // j = n: the last hull edge runs from k to n with slope −v(a_k)/(n−k).
        if (r->j == r->n) {
          const auto np = newton_polygon(v);
          REQUIRE_FALSE(np.segments.empty());
          const auto& s = np.segments.back();
          CHECK(s.start == r->k);
          CHECK(s.length == r->n - r->k);
          CHECK(s.slope == scale(v[r->k], Rational(-1) / Rational(static_cast<long>(r->n - r->k))));
          if (r->k == 0) CHECK(np.segments.size() == 1);
        }
      }
      try {
        if (const auto r = theorem2(v, g)) {
          CHECK(r->d1 <= r->j);
          if (r->d2) CHECK(*r->d2 <= r->n - r->j);
          CHECK(r->delta_f == (r->d2 ? std::min(r->d1, *r->d2) : r->d1));
          for (const auto& e : r->trace) {
            CHECK(lex_cmp(e.reference, e.scaled) == e.outcome);
            CHECK(e.outcome <= 0);
          }
        }
      } catch (const InapplicableError&) {
        CHECK(v[0].is_infinite());
      }
    }
  }

  TEST_CASE("newton polygon matches a brute-force hull") {
    testgen::Rng rng(505);
    for (int t = 0; t < 500; ++t) {
      const std::size_t rank = t % 2 ? 2 : 1;
      const auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 9));
      const auto v = testgen::to_values(testgen::int_values(rng, n, rank, -4, 4, 20));
      const auto np = newton_polygon(v);
      std::vector<std::size_t> got;
      for (const auto& [i, val] : np.vertices) {
        got.push_back(i);
        CHECK(val == v[i]);
      }
      CHECK(got == brute_hull(v));
      for (std::size_t s = 0; s + 1 < np.segments.size(); ++s) CHECK(np.segments[s].slope < np.segments[s + 1].slope);
      for (const auto& s : np.segments) {
        for (std::size_t i = s.start; i <= s.start + s.length; ++i) {
          if (v[i].is_infinite()) continue;
          const Value line = v[s.start] + scale(s.slope, Rational(static_cast<long>(i - s.start)));
          CHECK(v[i] >= line);
        }
      }
    }
  }
}
