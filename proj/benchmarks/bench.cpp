#include <benchmark/benchmark.h>

#include "krull/analysis.hpp"
#include "krull/oracle/finite_field.hpp"
#include "krull/oracle/harness.hpp"

using namespace krull;

namespace {

const char* const kP1 = "(1 + 4*x^4 + 4*z)*(x + 2*x*z^2 + 2*x^2*z^4 + z^5)";

void BM_AnalyzeRank2(benchmark::State& state) {
  const auto domain = DomainTag::parse("Q(x)");
  const auto spec = ValuationSpec::parse("qx-rank2:2");
  for (auto _ : state) benchmark::DoNotOptimize(analyze_expression(kP1, domain, spec));
}
BENCHMARK(BM_AnalyzeRank2);

void BM_AnalyzeBinomial(benchmark::State& state) {
  const auto domain = DomainTag::parse("Q");
  const auto spec = ValuationSpec::parse("p-adic:3");
  const std::string f = "z^" + std::to_string(state.range(0)) + " - 3";
  for (auto _ : state) benchmark::DoNotOptimize(analyze_expression(f, domain, spec));
}
BENCHMARK(BM_AnalyzeBinomial)->Arg(4)->Arg(16)->Arg(64);

void BM_FactorModP(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  // z^12 + z + 1 has a mixed degree pattern for small primes.
  const auto f = parse_poly<Rational>("z^12 + z + 1", DomainTag::parse("Q"));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::factor_mod_p(f, p));
}
BENCHMARK(BM_FactorModP)->Arg(2)->Arg(7)->Arg(101);

void BM_HarnessTrial(benchmark::State& state) {
  oracle::HarnessConfig c;
  c.valuation = ValuationSpec::parse(state.range(0) == 0 ? "p-adic:2" : "monomial-lex");
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::run_trial(c, seed++));
}
BENCHMARK(BM_HarnessTrial)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
