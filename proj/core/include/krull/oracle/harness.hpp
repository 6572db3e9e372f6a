#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krull/analysis.hpp"

namespace krull::oracle {

struct HarnessConfig {
  std::size_t trials = 1000;
  std::size_t max_factor_degree = 4;
  std::int64_t coefficient_height = 50;
  ValuationSpec valuation{ValuationKind::kPAdic, 2};
  std::optional<DomainTag> domain;  // defaults to valuation.default_domain()
  std::uint64_t seed = 42;
  std::size_t max_factors = 2;
  std::size_t threads = 0;  // 0: hardware concurrency
  // Passed to the lower-bound criterion; switching the convexity guard off
  // shows the harness catching the unguarded bound.
  Theorem2Options theorem2;

  DomainTag effective_domain() const { return domain ? *domain : valuation.default_domain(); }
};

// "key = value" lines; '#' starts a comment. Keys: trials, max_factor_degree,
// coefficient_height, valuation, domain, seed, max_factors, threads.
// Throws ConfigError on unknown keys or bad values.
HarnessConfig parse_harness_config(std::string_view text);

struct FactorRecord {
  std::string polynomial;
  std::size_t degree = 0;
  // Degree 1, or over ℚ certified by mod-p degree patterns.
  bool certified_irreducible = false;
};

struct SoundnessTrial {
  std::size_t index = 0;
  std::uint64_t seed = 0;  // run_trial(config, seed) reproduces this record
  std::string domain;
  std::string valuation;
  std::vector<FactorRecord> factors;
  std::string product;
  std::optional<std::size_t> bound;     // upper-bound criterion, when it fired
  std::optional<std::uint64_t> delta_f; // lower-bound criterion, when it fired
  std::string verdict;
  bool passed = true;
  std::vector<std::string> failures;
};

struct HarnessSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t theorem1_hits = 0;
  std::size_t theorem2_hits = 0;
  std::size_t delta_above_one = 0;  // trials where delta_f >= 2 made the check bite
  std::size_t irreducible_verdicts = 0;
};

struct HarnessResult {
  std::vector<SoundnessTrial> trials;
  HarnessSummary summary;
};

// Per-trial seed derived from the run seed.
std::uint64_t trial_seed(std::uint64_t run_seed, std::size_t index);

// Samples the factors for one trial from `seed` and checks the product.
SoundnessTrial run_trial(const HarnessConfig& config, std::uint64_t seed);

// Runs config.trials independent trials, in parallel when threads != 1.
// Trial order in the result matches the index order.
HarnessResult soundness_harness(const HarnessConfig& config);

// Checks a given factorization: parses the factors over `domain`, multiplies
// them, analyzes the product and applies the same checks as a random trial.
SoundnessTrial check_factorization(const std::vector<std::string>& factors, const DomainTag& domain,
                                   const ValuationSpec& valuation, const Theorem2Options& theorem2 = {});

std::string to_json(const SoundnessTrial& trial);

}  // namespace krull::oracle
