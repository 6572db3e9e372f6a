#include <random>

#include "../support/fixtures.hpp"
#include "../support/random.hpp"
#include "doctest.h"
#include "krull/errors.hpp"
#include "krull/parser.hpp"

using namespace krull;

namespace {

const DomainTag kQ = DomainTag::parse("Q");
const DomainTag kQx = DomainTag::parse("Q(x)");
const DomainTag kFQ = DomainTag::parse("F(x,y):Q");
const DomainTag kF3 = DomainTag::parse("F(x,y):p=3");

template <class C>
Poly<C> parse(const std::string& s, const DomainTag& tag) {
  return parse_poly<C>(s, tag);
}

template <class C>
Poly<C> product_of(const std::vector<std::string>& factors, const DomainTag& tag) {
  Poly<C> out = Poly<C>::constant(C(1));
  for (const auto& f : factors) out = out * parse<C>(f, tag);
  return out;
}

std::size_t error_column(const std::string& text, const DomainTag& tag) {
  try {
    switch (tag.kind) {
      case DomainKind::kRational:
        parse_poly<Rational>(text, tag);
        break;
      case DomainKind::kRationalFunction:
        parse_poly<UniRatFunc>(text, tag);
        break;
      default:
        parse_poly<BiFracQ>(text, tag);
    }
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_SUITE("domains") {
  TEST_CASE("domain tags") {
    CHECK(kQ.kind == DomainKind::kRational);
    CHECK(kQx.kind == DomainKind::kRationalFunction);
    CHECK(kFQ.kind == DomainKind::kBivariateRational);
    CHECK(kF3.prime == 3);
    CHECK(DomainTag::parse("F(x, y):Q") == kFQ);
    CHECK(kF3.to_string() == "F(x,y):p=3");
    CHECK_THROWS_AS(DomainTag::parse("F(x,y):p=4"), ConfigError);
    CHECK_THROWS_AS(DomainTag::parse("Z"), ConfigError);
  }

  TEST_CASE("poly_mul reproduces P1 and P2 from their factors") {
    const auto p1 = product_of<UniRatFunc>(fixtures::kP1Factors, kQx);
    CHECK(p1 == parse<UniRatFunc>(fixtures::kP1, kQx));
    CHECK(p1.deg() == 6);
    // a₅ = 1 + 8x² + 4x⁴ and a₆ = 4 after expansion.
    CHECK(p1[5] == UniRatFunc(UniPolyQ(std::vector<Rational>{1, 0, 8, 0, 4})));
    CHECK(p1[6] == UniRatFunc(4));
    const auto p2 = product_of<BiFracQ>(fixtures::kP2Factors, kFQ);
    CHECK(p2.deg() == 7);
    CHECK(p2 == parse<BiFracQ>(fixtures::kP2, kFQ));
    // a₆ = −(1 − xy), a₁ = −(1 − x²)y.
    CHECK(p2[6] == parse<BiFracQ>("-(1 - x*y)", kFQ)[0]);
    CHECK(p2[1] == parse<BiFracQ>("-(1 - x^2)*y", kFQ)[0]);
    const auto f = parse<Rational>("3*z^2 - 1/2", kQ);
    CHECK(f * Poly<Rational>::constant(1) == f);
  }

  TEST_CASE("parse examples") {
    const auto p3 = parse<BiFracQ>(fixtures::kP3, kFQ);
    REQUIRE(p3.deg() == 4);
    CHECK(p3[0] == BiFracQ::monomial(Rational(1), 0, 1));
    CHECK(p3[1] == BiFracQ::monomial(Rational(1), 1, 0));
    CHECK(p3[2] == BiFracQ(1) + BiFracQ::monomial(Rational(1), 1, 2));
    CHECK(p3[3] == BiFracQ::monomial(Rational(1), 2, 1));
    CHECK(p3[4] == BiFracQ::monomial(Rational(1), 1, 1));
    CHECK(p3 == product_of<BiFracQ>(fixtures::kP3Factors, kFQ));

    CHECK(parse<Rational>("0", kQ).is_zero());
    CHECK_FALSE(parse<Rational>("0", kQ).degree().has_value());
    const auto e = parse<Rational>("z^2 + 2*z + 2", kQ);
    CHECK(e.coefficients() == std::vector<Rational>{2, 2, 1});
    CHECK(parse<Rational>("3/4*z", kQ)[1] == Rational(3, 4));
    CHECK(parse<Rational>("z^2 \xE2\x88\x92 1", kQ) == parse<Rational>("z^2 - 1", kQ));
    CHECK(parse<BiFracFp>("4*x + 2*z", kF3)[0] == BiFracFp::monomial(Fp(1, 3), 1, 0));
  }

  TEST_CASE("parse errors carry columns") {
    CHECK(error_column("z^2 + 2z", kQ) == 8);
    CHECK(error_column("z + y", kQx) == 5);
    CHECK(error_column("z + x", kQ) == 5);
    CHECK(error_column("1/0 + z", kQ) == 2);
    CHECK(error_column("1/z", kQ) == 2);
    CHECK(error_column("(z + 1", kQ) == 7);
    CHECK(error_column("z +", kQ) == 4);
    CHECK(error_column("z $ 1", kQ) == 3);
    CHECK(error_column("z^2^3", kQ) == 4);
    CHECK_THROWS_WITH_AS(parse<UniRatFunc>("z + y", kQx), doctest::Contains("not allowed"), ParseError);
  }

  TEST_CASE("reduce_frac examples") {
    const UniPolyQ x2m1(std::vector<Rational>{-1, 0, 1});
    const UniPolyQ xm1(std::vector<Rational>{-1, 1});
    auto r = reduce_frac(x2m1, xm1);
    CHECK(r.numerator == UniPolyQ(std::vector<Rational>{1, 1}));
    CHECK(r.denominator == UniPolyQ::constant(1));
    auto z = reduce_frac(UniPolyQ{}, xm1);
    CHECK(z.numerator.is_zero());
    CHECK(z.denominator == UniPolyQ::constant(1));
    auto h = reduce_frac(UniPolyQ(std::vector<Rational>{0, 2}), UniPolyQ::constant(4));
    CHECK(h.numerator == UniPolyQ(std::vector<Rational>{0, Rational(1, 2)}));
    CHECK(h.denominator == UniPolyQ::constant(1));
    CHECK_THROWS_AS((reduce_frac(xm1, UniPolyQ{})), DomainError);

    // Bivariate: (x² − y²)/(x − y) = x + y.
    const auto num = parse<BiFracQ>("x^2 - y^2", kFQ)[0].numerator();
    const auto den = parse<BiFracQ>("x - y", kFQ)[0].numerator();
    auto b = reduce_frac(num, den);
    CHECK(BiFracQ(b.numerator) == parse<BiFracQ>("x + y", kFQ)[0]);
    CHECK(b.denominator == BiPoly<Rational>(std::int64_t{1}));
  }

  TEST_CASE("reduce_frac is idempotent and leaves a unit gcd") {
    testgen::Rng rng(3);
    for (int t = 0; t < 300; ++t) {
      const UniPolyQ n = testgen::uni_poly(rng, 4);
      UniPolyQ d = testgen::uni_poly(rng, 3);
      if (d.is_zero()) continue;
      const auto r = reduce_frac(n, d);
      const auto again = reduce_frac(r.numerator, r.denominator);
      CHECK(again.numerator == r.numerator);
      CHECK(again.denominator == r.denominator);
      if (!r.numerator.is_zero()) CHECK(gcd(r.numerator, r.denominator).deg() == 0);
      CHECK(r.denominator.leading() == 1);
      // Same element: n·d' = n'·d.
      CHECK(n * r.denominator == r.numerator * d);
    }
    for (int t = 0; t < 150; ++t) {
      const auto n = testgen::bi_poly<Rational>(rng, 0) * testgen::bi_poly<Rational>(rng, 0);
      const auto c = testgen::bi_poly<Rational>(rng, 0);
      auto d = testgen::bi_poly<Rational>(rng, 0) * c;
      if (d.is_zero()) continue;
      const auto r = reduce_frac(n * c, d);
      if (!r.numerator.is_zero()) CHECK(bivariate::gcd(r.numerator, r.denominator).deg() == 0);
      CHECK(n * c * r.denominator == r.numerator * d);
    }
  }

  TEST_CASE("ring axioms on random polynomials") {
    testgen::Rng rng(5);
    auto gen_q = [](testgen::Rng& r) { return testgen::rational(r); };
    auto gen_qx = [](testgen::Rng& r) { return testgen::uni_ratfunc(r); };
    auto gen_fq = [](testgen::Rng& r) { return testgen::bi_frac<Rational>(r, 0); };
    auto gen_f5 = [](testgen::Rng& r) { return testgen::bi_frac<Fp>(r, 5); };
    auto check = [&](auto gen, auto tag_type) {
      using C = typename decltype(tag_type)::type;
      for (int t = 0; t < 60; ++t) {
        const auto f = testgen::z_poly<C>(rng, 3, gen);
        const auto g = testgen::z_poly<C>(rng, 3, gen);
        const auto h = testgen::z_poly<C>(rng, 3, gen);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK((f * g).deg() == f.deg() + g.deg());
      }
    };
    check(gen_q, std::type_identity<Rational>{});
    check(gen_qx, std::type_identity<UniRatFunc>{});
    check(gen_fq, std::type_identity<BiFracQ>{});
    check(gen_f5, std::type_identity<BiFracFp>{});
  }

  TEST_CASE("parse inverts render") {
    testgen::Rng rng(9);
    const DomainTag f5 = DomainTag::parse("F(x,y):p=5");
    for (int t = 0; t < 100; ++t) {
      const auto a = testgen::z_poly<Rational>(rng, 4, [](testgen::Rng& r) { return testgen::rational(r); });
      CHECK(parse<Rational>(render(a), kQ) == a);
      const auto b = testgen::z_poly<UniRatFunc>(rng, 3, [](testgen::Rng& r) { return testgen::uni_ratfunc(r); });
      CHECK(parse<UniRatFunc>(render(b), kQx) == b);
      const auto c = testgen::z_poly<BiFracQ>(rng, 3, [](testgen::Rng& r) { return testgen::bi_frac<Rational>(r, 0); });
      CHECK(parse<BiFracQ>(render(c), kFQ) == c);
      const auto d = testgen::z_poly<BiFracFp>(rng, 3, [](testgen::Rng& r) { return testgen::bi_frac<Fp>(r, 5); });
      CHECK(parse<BiFracFp>(render(d), f5) == d);
    }
  }
}
