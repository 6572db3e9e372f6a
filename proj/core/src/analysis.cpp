#include "krull/analysis.hpp"

#include "krull/errors.hpp"

namespace krull {

std::string Verdict::kind_name() const {
  switch (kind) {
    case VerdictKind::kIrreducible:
      return "Irreducible";
    case VerdictKind::kTwoFactorBound:
      return "TwoFactorBound";
    case VerdictKind::kMinFactorDegree:
      return "MinFactorDegree";
    case VerdictKind::kBoth:
      return "Both";
    case VerdictKind::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string Verdict::to_string() const {
  switch (kind) {
    case VerdictKind::kTwoFactorBound:
      return kind_name() + "(" + std::to_string(*bound) + ")";
    case VerdictKind::kMinFactorDegree:
      return kind_name() + "(" + std::to_string(*min_degree) + ")";
    case VerdictKind::kBoth:
      return kind_name() + "(" + std::to_string(*bound) + "," + std::to_string(*min_degree) + ")";
    default:
      return kind_name();
  }
}

std::string to_string(Theorem2Status s) {
  switch (s) {
    case Theorem2Status::kSatisfied:
      return "satisfied";
    case Theorem2Status::kNotSatisfied:
      return "not_satisfied";
    case Theorem2Status::kInapplicable:
      return "inapplicable";
  }
  return "?";
}

Verdict assemble_verdict(std::size_t n, const std::optional<Theorem1Report>& t1,
                         const std::optional<Theorem2Report>& t2) {
  const bool irreducible = (t1 && t1->irreducible) || (t2 && 2 * t2->delta_f > n) ||
                           (t1 && t2 && t1->bound < t2->delta_f);
  if (irreducible) return {VerdictKind::kIrreducible, std::nullopt, std::nullopt};
  const bool bound_informative = t1 && t1->bound < n / 2;
  const bool delta_informative = t2 && t2->delta_f >= 2;
  if (bound_informative && delta_informative) return {VerdictKind::kBoth, t1->bound, t2->delta_f};
  if (bound_informative) return {VerdictKind::kTwoFactorBound, t1->bound, std::nullopt};
  if (delta_informative) return {VerdictKind::kMinFactorDegree, std::nullopt, t2->delta_f};
  return {};
}

AnalysisReport analyze_values(std::vector<Value> values, const ValueGroup& group,
                              const AnalyzeOptions& options) {
  AnalysisReport r;
  if (values.empty() || values.back().is_infinite()) throw DomainError("analyze: zero polynomial");
  if (options.strip_z0) {
    std::size_t m = 0;
    while (values[m].is_infinite()) ++m;
    values.erase(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(m));
    r.stripped_z_power = m;
  }
  if (values.size() < 2) throw DomainError("analyze: polynomial must have degree >= 1 in z");
  r.degree = values.size() - 1;

  r.theorem1 = theorem1(values, group);
  if (group.rank() == 1) {
    const auto c1 = corollary1(values, group);
    r.corollary1_agrees = c1.has_value() == r.theorem1.has_value() &&
                          (!c1 || c1->all_valid_pairs == r.theorem1->all_valid_pairs);
  }
  try {
    r.theorem2 = theorem2(values, group, options.theorem2);
    r.theorem2_status = r.theorem2 ? Theorem2Status::kSatisfied : Theorem2Status::kNotSatisfied;
  } catch (const InapplicableError& e) {
    r.theorem2_status = Theorem2Status::kInapplicable;
    r.theorem2_note = e.what();
  }
  r.verdict = assemble_verdict(r.degree, r.theorem1, r.theorem2);
  r.newton_polygon = newton_polygon(values);
  r.coefficient_values = std::move(values);
  return r;
}

AnalysisReport analyze_expression(std::string_view expression, const DomainTag& domain,
                                  const ValuationSpec& valuation, const AnalyzeOptions& options) {
  valuation.check_compatible(domain);
  AnalysisReport r;
  switch (domain.kind) {
    case DomainKind::kRational:
      r = analyze(parse_poly<Rational>(expression, domain), PAdicValuation(valuation.prime), options);
      break;
    case DomainKind::kRationalFunction:
      r = analyze(parse_poly<UniRatFunc>(expression, domain), QxRank2Valuation(valuation.prime), options);
      break;
    case DomainKind::kBivariateRational:
      r = analyze(parse_poly<BiFracQ>(expression, domain), MonomialLexValuation{}, options);
      break;
    case DomainKind::kBivariatePrime:
      r = analyze(parse_poly<BiFracFp>(expression, domain), MonomialLexValuation{}, options);
      break;
  }
  r.domain = domain.to_string();
  return r;
}

}  // namespace krull
