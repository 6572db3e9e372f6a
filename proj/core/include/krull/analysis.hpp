#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krull/criteria.hpp"
#include "krull/parser.hpp"
#include "krull/valuation.hpp"

namespace krull {

enum class VerdictKind { kIrreducible, kTwoFactorBound, kMinFactorDegree, kBoth, kInconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::kInconclusive;
  std::optional<std::size_t> bound;          // TwoFactorBound / Both
  std::optional<std::uint64_t> min_degree;   // MinFactorDegree / Both

  // "Irreducible", "TwoFactorBound(1)", "MinFactorDegree(2)", "Both(1,2)", "Inconclusive".
  std::string to_string() const;
  std::string kind_name() const;
};

enum class Theorem2Status { kSatisfied, kNotSatisfied, kInapplicable };

struct AnalysisReport {
  static constexpr int kSchemaVersion = 1;

  std::string polynomial;  // input echo
  std::string domain;
  std::string valuation;
  std::size_t degree = 0;  // of the analyzed polynomial
  std::size_t stripped_z_power = 0;
  std::vector<Value> coefficient_values;
  std::optional<Theorem1Report> theorem1;
  // Rank 1 only: whether the gcd form gave the same pair set.
  std::optional<bool> corollary1_agrees;
  std::optional<Theorem2Report> theorem2;
  Theorem2Status theorem2_status = Theorem2Status::kNotSatisfied;
  std::string theorem2_note;
  Verdict verdict;
  NewtonPolygon newton_polygon;
};

std::string to_string(Theorem2Status s);

struct AnalyzeOptions {
  // Divide out the largest power of z first, so that a₀ ≠ 0.
  bool strip_z0 = false;
  Theorem2Options theorem2;
};

// Combines the two certificates into one verdict:
//  - a bound B is informative when B = 0 or B < ⌊n/2⌋;
//  - δ is informative when δ ≥ 2, and proves irreducibility when 2δ > n;
//  - B < δ together also proves irreducibility (the small factor would need
//    an irreducible factor of degree < δ).
Verdict assemble_verdict(std::size_t n, const std::optional<Theorem1Report>& t1,
                         const std::optional<Theorem2Report>& t2);

// Runs every criterion on the coefficient values of a polynomial of degree ≥ 1.
AnalysisReport analyze_values(std::vector<Value> values, const ValueGroup& group,
                              const AnalyzeOptions& options = {});

template <class C, class V>
AnalysisReport analyze(const Poly<C>& f, const V& v, const AnalyzeOptions& options = {}) {
  if (f.is_zero()) throw DomainError("analyze: zero polynomial");
  AnalysisReport r = analyze_values(coefficient_values(v, f), v.group(), options);
  r.polynomial = render(f);
  r.valuation = v.spec();
  return r;
}

// Parses `expression` over `domain` and analyzes it under `valuation`.
AnalysisReport analyze_expression(std::string_view expression, const DomainTag& domain,
                                  const ValuationSpec& valuation, const AnalyzeOptions& options = {});

}  // namespace krull
