#include "krull/oracle/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <random>
#include <thread>

#include "json.hpp"
#include "krull/errors.hpp"
#include "krull/oracle/finite_field.hpp"

namespace krull::oracle {

namespace {

constexpr std::array<std::uint64_t, 9> kCertPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("harness config: " + key + " expects a non-negative integer, got '" + text + "'");
  }
  return out;
}

// Which valuation band a sampled coefficient should fall in.
enum class Band { kUnit, kPositive, kAny };

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

bool chance(Rng& rng, int percent) { return uniform(rng, 0, 99) < percent; }

std::int64_t nonzero(Rng& rng, std::int64_t height) {
  std::int64_t c = 0;
  while (c == 0) c = uniform(rng, -height, height);
  return c;
}

std::int64_t unit_mod(Rng& rng, std::int64_t height, std::uint64_t p) {
  std::int64_t c = 0;
  while (c == 0 || c % static_cast<std::int64_t>(p) == 0) c = uniform(rng, -height, height);
  return c;
}

// ℚ under a p-adic valuation. Numerators and denominators stay within the
// height bound where p allows it.
struct PAdicSampler {
  std::uint64_t p;
  std::int64_t height;

  Rational operator()(Rng& rng, Band band) const {
    const auto ip = static_cast<std::int64_t>(p);
    switch (band) {
      case Band::kUnit:
        return Rational(unit_mod(rng, height, p));
      case Band::kPositive: {
        std::int64_t scale = ip;
        if (chance(rng, 30) && ip * ip <= height) scale = ip * ip;
        return Rational(nonzero(rng, std::max<std::int64_t>(1, height / scale)) * scale);
      }
      case Band::kAny:
        break;
    }
    if (chance(rng, 15)) return Rational(0);
    Rational c(nonzero(rng, height));
    if (chance(rng, 15)) c /= Rational(ip);
    return c;
  }
};

UniPolyQ small_poly(Rng& rng, std::int64_t height, std::size_t max_deg, std::int64_t multiple) {
  std::vector<Rational> c;
  const std::size_t d = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_deg)));
  for (std::size_t i = 0; i <= d; ++i) {
    c.emplace_back(chance(rng, 40) ? 0 : uniform(rng, -height, height) * multiple);
  }
  return UniPolyQ(std::move(c));
}

// ℚ(x) under (v_p, v_∞ of the residue).
struct QxSampler {
  std::uint64_t p;
  std::int64_t height;

  UniRatFunc operator()(Rng& rng, Band band) const {
    const auto ip = static_cast<std::int64_t>(p);
    const std::int64_t h = std::max<std::int64_t>(1, height / ip);
    switch (band) {
      case Band::kUnit: {
        // A p-unit constant plus p times anything: residue is a nonzero constant.
        UniPolyQ f = UniPolyQ::constant(Rational(unit_mod(rng, height, p))) + small_poly(rng, h, 2, ip);
        return UniRatFunc(f);
      }
      case Band::kPositive: {
        UniPolyQ f = small_poly(rng, h, 2, ip);
        if (f.is_zero()) f = UniPolyQ::constant(Rational(ip));
        return UniRatFunc(f);
      }
      case Band::kAny:
        break;
    }
    if (chance(rng, 15)) return UniRatFunc(0);
    UniPolyQ f = small_poly(rng, height, 2, 1);
    if (f.is_zero()) f = UniPolyQ::constant(Rational(nonzero(rng, height)));
    UniRatFunc c(f);
    if (chance(rng, 10)) c = c / UniRatFunc(Rational(ip));
    if (chance(rng, 10)) {
      c = c / UniRatFunc(UniPolyQ(std::vector<Rational>{Rational(uniform(rng, -3, 3)), Rational(1)}));
    }
    return c;
  }
};

// F(x, y) under the monomial-lex valuation, with scalars from K.
template <class K>
struct BivariateSampler {
  std::int64_t height;
  std::uint64_t p;  // 0 for ℚ

  K scalar(std::int64_t c) const {
    if constexpr (std::is_same_v<K, Fp>) {
      return Fp(c, p);
    } else {
      return K(c);
    }
  }
  K nonzero_scalar(Rng& rng) const {
    for (;;) {
      K c = scalar(nonzero(rng, height));
      if (!is_zero(c)) return c;
    }
  }
  BiFrac<K> mono(std::size_t t, std::size_t s) const { return BiFrac<K>::monomial(scalar(1), t, s); }

  // c₀ + sparse terms in x, y of total degree ≥ 1.
  BiFrac<K> unit(Rng& rng) const {
    BiFrac<K> f = BiFrac<K>::scalar(nonzero_scalar(rng));
    const auto terms = uniform(rng, 0, 2);
    for (std::int64_t i = 0; i < terms; ++i) {
      std::size_t t = static_cast<std::size_t>(uniform(rng, 0, 2));
      std::size_t s = static_cast<std::size_t>(uniform(rng, 0, 2));
      if (t == 0 && s == 0) t = 1;
      f = f + BiFrac<K>::scalar(nonzero_scalar(rng)) * mono(t, s);
    }
    return f;
  }

  BiFrac<K> operator()(Rng& rng, Band band) const {
    switch (band) {
      case Band::kUnit:
        return unit(rng);
      case Band::kPositive:
        return (chance(rng, 60) ? mono(1, 0) : mono(0, 1)) * unit(rng);
      case Band::kAny:
        break;
    }
    if (chance(rng, 15)) return BiFrac<K>(0);
    BiFrac<K> f = mono(static_cast<std::size_t>(uniform(rng, 0, 1)), static_cast<std::size_t>(uniform(rng, 0, 1))) *
                  unit(rng);
    if (chance(rng, 10)) f = f / mono(1, 0);
    if (chance(rng, 10)) f = f / mono(0, 1);
    return f;
  }
};

template <class C, class Sampler>
Poly<C> sample_factor(Rng& rng, const Sampler& sample, std::size_t degree) {
  std::vector<C> c(degree + 1);
  const int shape = static_cast<int>(uniform(rng, 0, 99));
  for (std::size_t i = 0; i <= degree; ++i) {
    Band band = Band::kAny;
    if (shape < 40) {
      // Eisenstein-shaped: unit leading coefficient, the rest of positive value.
      band = i == degree ? Band::kUnit : Band::kPositive;
    } else if (shape < 70) {
      // A unit somewhere in the middle with mixed values around it.
      band = chance(rng, 35) ? Band::kUnit : (chance(rng, 50) ? Band::kPositive : Band::kAny);
    }
    c[i] = sample(rng, band);
  }
  while (is_zero(c[degree])) c[degree] = sample(rng, Band::kUnit);
  return Poly<C>(std::move(c));
}

template <class C>
bool certify(const Poly<C>& f) {
  if (f.deg() == 1) return true;
  if constexpr (std::is_same_v<C, Rational>) {
    return pattern_irreducible(f, kCertPrimes).certificate == Certificate::kCertified;
  } else {
    return false;
  }
}

template <class C, class V>
SoundnessTrial evaluate(const std::vector<Poly<C>>& factors, const V& v, const DomainTag& domain,
                        const Theorem2Options& theorem2) {
  SoundnessTrial t;
  t.domain = domain.to_string();
  t.valuation = v.spec();
  Poly<C> product = Poly<C>::constant(C(1));
  for (const auto& g : factors) {
    product = product * g;
    t.factors.push_back({render(g), g.is_zero() ? 0 : g.deg(), !g.is_zero() && g.deg() > 0 && certify(g)});
  }
  t.product = render(product);
  if (product.is_zero() || product.deg() == 0) {
    t.passed = false;
    t.failures.push_back("product has degree 0");
    return t;
  }
  const std::size_t n = product.deg();
  AnalysisReport report;
  try {
    AnalyzeOptions options;
    options.theorem2 = theorem2;
    report = analyze(product, v, options);
  } catch (const Error& e) {
    t.passed = false;
    t.failures.push_back(std::string("analyze threw: ") + e.what());
    return t;
  }
  t.verdict = report.verdict.to_string();
  std::vector<std::size_t> degrees;
  for (const auto& f : t.factors) {
    if (f.degree > 0) degrees.push_back(f.degree);
  }

  if (report.theorem1) {
    const std::size_t bound = report.theorem1->bound;
    t.bound = bound;
    // Every split of the factors into two nonconstant products must have a side of degree ≤ bound.
    const std::size_t s = degrees.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << s); ++mask) {
      std::size_t left = 0;
      for (std::size_t i = 0; i < s; ++i) {
        if (mask >> i & 1) left += degrees[i];
      }
      if (std::min(left, n - left) > bound) {
        t.failures.push_back("split " + std::to_string(left) + "+" + std::to_string(n - left) +
                             " has both sides above bound " + std::to_string(bound));
        break;
      }
    }
  }
  if (report.theorem2) {
    const std::uint64_t delta = report.theorem2->delta_f;
    t.delta_f = delta;
    // A factor of degree < δ contains an irreducible factor of degree < δ.
    for (std::size_t i = 0; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      if (f.degree > 0 && f.degree < delta) {
        t.failures.push_back("factor " + std::to_string(i) + " has degree " + std::to_string(f.degree) +
                             " < delta_f " + std::to_string(delta) +
                             (f.certified_irreducible ? " (certified irreducible)" : ""));
      }
    }
  }
  if (report.verdict.kind == VerdictKind::kIrreducible && degrees.size() >= 2) {
    t.failures.push_back("verdict Irreducible on a product of " + std::to_string(degrees.size()) + " factors");
  }
  if (report.corollary1_agrees && !*report.corollary1_agrees) {
    t.failures.push_back("gcd form and divisor form disagree");
  }
  t.passed = t.failures.empty();
  return t;
}

template <class C, class V, class Sampler>
SoundnessTrial random_trial(const HarnessConfig& config, std::uint64_t seed, const V& v, const Sampler& sample,
                            const DomainTag& domain) {
  Rng rng(seed);
  const auto max_deg = static_cast<std::int64_t>(std::max<std::size_t>(1, config.max_factor_degree));
  const auto count = uniform(rng, 2, static_cast<std::int64_t>(std::max<std::size_t>(2, config.max_factors)));
  std::vector<Poly<C>> factors;
  for (std::int64_t i = 0; i < count; ++i) {
    factors.push_back(sample_factor<C>(rng, sample, static_cast<std::size_t>(uniform(rng, 1, max_deg))));
  }
  SoundnessTrial t = evaluate(factors, v, domain, config.theorem2);
  t.seed = seed;
  return t;
}

}  // namespace

HarnessConfig parse_harness_config(std::string_view text) {
  HarnessConfig c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("harness config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "trials") {
      c.trials = parse_unsigned(key, value);
    } else if (key == "max_factor_degree") {
      c.max_factor_degree = parse_unsigned(key, value);
      if (c.max_factor_degree == 0) throw ConfigError("harness config: max_factor_degree must be >= 1");
    } else if (key == "coefficient_height") {
      c.coefficient_height = static_cast<std::int64_t>(parse_unsigned(key, value));
      if (c.coefficient_height == 0) throw ConfigError("harness config: coefficient_height must be >= 1");
    } else if (key == "valuation") {
      c.valuation = ValuationSpec::parse(value);
    } else if (key == "domain") {
      c.domain = DomainTag::parse(value);
    } else if (key == "seed") {
      c.seed = parse_unsigned(key, value);
    } else if (key == "max_factors") {
      c.max_factors = parse_unsigned(key, value);
      if (c.max_factors < 2 || c.max_factors > 8) throw ConfigError("harness config: max_factors must be in 2..8");
    } else if (key == "threads") {
      c.threads = parse_unsigned(key, value);
    } else {
      throw ConfigError("harness config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  c.valuation.check_compatible(c.effective_domain());
  return c;
}

std::uint64_t trial_seed(std::uint64_t run_seed, std::size_t index) {
  return splitmix64(run_seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

SoundnessTrial run_trial(const HarnessConfig& config, std::uint64_t seed) {
  const DomainTag domain = config.effective_domain();
  config.valuation.check_compatible(domain);
  const std::int64_t h = config.coefficient_height;
  switch (domain.kind) {
    case DomainKind::kRational: {
      const PAdicValuation v(config.valuation.prime);
      return random_trial<Rational>(config, seed, v, PAdicSampler{config.valuation.prime, h}, domain);
    }
    case DomainKind::kRationalFunction: {
      const QxRank2Valuation v(config.valuation.prime);
      return random_trial<UniRatFunc>(config, seed, v, QxSampler{config.valuation.prime, h}, domain);
    }
    case DomainKind::kBivariateRational:
      return random_trial<BiFracQ>(config, seed, MonomialLexValuation{}, BivariateSampler<Rational>{h, 0}, domain);
    case DomainKind::kBivariatePrime:
      return random_trial<BiFracFp>(config, seed, MonomialLexValuation{}, BivariateSampler<Fp>{h, domain.prime},
                                    domain);
  }
  throw InternalError("run_trial: unknown domain");
}

HarnessResult soundness_harness(const HarnessConfig& config) {
  config.valuation.check_compatible(config.effective_domain());
  HarnessResult out;
  out.trials.resize(config.trials);
  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, config.trials));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      SoundnessTrial t = run_trial(config, trial_seed(config.seed, i));
      t.index = i;
      out.trials[i] = std::move(t);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  auto& s = out.summary;
  s.trials = out.trials.size();
  for (const auto& t : out.trials) {
    if (!t.passed) ++s.failures;
    if (t.bound) ++s.theorem1_hits;
    if (t.delta_f) ++s.theorem2_hits;
    if (t.delta_f && *t.delta_f >= 2) ++s.delta_above_one;
    if (t.verdict == "Irreducible") ++s.irreducible_verdicts;
  }
  return out;
}

SoundnessTrial check_factorization(const std::vector<std::string>& factors, const DomainTag& domain,
                                   const ValuationSpec& valuation, const Theorem2Options& theorem2) {
  valuation.check_compatible(domain);
  auto parse_all = [&]<class C>(std::type_identity<C>) {
    std::vector<Poly<C>> out;
    for (const auto& f : factors) out.push_back(parse_poly<C>(f, domain));
    return out;
  };
  switch (domain.kind) {
    case DomainKind::kRational:
      return evaluate(parse_all(std::type_identity<Rational>{}), PAdicValuation(valuation.prime), domain, theorem2);
    case DomainKind::kRationalFunction:
      return evaluate(parse_all(std::type_identity<UniRatFunc>{}), QxRank2Valuation(valuation.prime), domain, theorem2);
    case DomainKind::kBivariateRational:
      return evaluate(parse_all(std::type_identity<BiFracQ>{}), MonomialLexValuation{}, domain, theorem2);
    case DomainKind::kBivariatePrime:
      return evaluate(parse_all(std::type_identity<BiFracFp>{}), MonomialLexValuation{}, domain, theorem2);
  }
  throw InternalError("check_factorization: unknown domain");
}

std::string to_json(const SoundnessTrial& t) {
  using nlohmann::json;
  json factors = json::array();
  for (const auto& f : t.factors) {
    factors.push_back(
        {{"polynomial", f.polynomial}, {"degree", f.degree}, {"certified_irreducible", f.certified_irreducible}});
  }
  json out = {{"schema_version", AnalysisReport::kSchemaVersion},
              {"index", t.index},
              {"seed", t.seed},
              {"domain", t.domain},
              {"valuation", t.valuation},
              {"factors", factors},
              {"product", t.product},
              {"verdict", t.verdict},
              {"passed", t.passed},
              {"failures", t.failures}};
  out["bound"] = t.bound ? json(*t.bound) : json(nullptr);
  out["delta_f"] = t.delta_f ? json(*t.delta_f) : json(nullptr);
  return out.dump();
}

}  // namespace krull::oracle
