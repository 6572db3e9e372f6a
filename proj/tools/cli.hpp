#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "krull/analysis.hpp"

namespace krull::cli {

enum class Format { kText, kJson, kSvg };

struct CliConfig {
  std::string subcommand = "analyze";  // analyze | polygon | harness | batch
  std::optional<DomainTag> domain;
  std::optional<ValuationSpec> valuation;
  std::optional<std::string> expression;
  std::optional<std::string> file;
  Format format = Format::kText;
  bool strip_z0 = false;
  bool all_pairs = false;
  std::uint64_t seed = 42;
  bool seed_set = false;  // --seed or KRULL_DUMAS_SEED given
  // Harness only.
  std::optional<std::string> config_file;
  std::optional<std::size_t> trials;
};

enum ExitCode : int { kOk = 0, kPartialFailure = 1, kUsageError = 2 };

// Analyzes one expression and writes the report in config.format.
int run(const CliConfig& config, std::string_view input, std::ostream& out, std::ostream& err);

// One JSON record per input line. The first non-blank, non-comment line may
// be a header "domain=<tag> valuation=<spec>"; command-line values win.
int batch(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

int harness(const CliConfig& config, std::ostream& out, std::ostream& err);

// SVG 1.1 plot of the points (i, first component of v(aᵢ)) and their lower
// hull; every vertex carries the full value as a label.
std::string polygon_svg(const AnalysisReport& report);

// Full command line, including the KRULL_DUMAS_SEED override.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace krull::cli
