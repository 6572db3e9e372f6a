#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "krull/errors.hpp"
#include "krull/oracle/harness.hpp"
#include "krull/report.hpp"

namespace krull::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Prints the message and, for parse errors, the input with a caret under
// the offending column.
void report_error(std::ostream& err, std::string_view input, const Error& e) {
  err << "error: " << e.what() << "\n";
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err << "  " << input << "\n";
    err << "  " << std::string(pe->column() > 0 ? pe->column() - 1 : 0, ' ') << "^\n";
  }
}

struct Resolved {
  DomainTag domain;
  ValuationSpec valuation;
};

Resolved resolve(const CliConfig& config) {
  if (!config.valuation) throw ConfigError("--valuation is required");
  Resolved r{config.domain ? *config.domain : config.valuation->default_domain(), *config.valuation};
  r.valuation.check_compatible(r.domain);
  return r;
}

AnalysisReport analyze_line(const Resolved& r, std::string_view input, const CliConfig& config) {
  AnalyzeOptions options;
  options.strip_z0 = config.strip_z0;
  AnalysisReport report = analyze_expression(input, r.domain, r.valuation, options);
  return report;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Display coordinate only; the values themselves stay exact.
double approx(const Rational& q) { return q.get_d(); }

std::optional<Resolved> parse_header(const std::string& line) {
  if (line.rfind("domain=", 0) != 0) return std::nullopt;
  const auto v = line.find("valuation=");
  if (v == std::string::npos) throw ConfigError("batch header: expected 'domain=<tag> valuation=<spec>'");
  Resolved r{DomainTag::parse(trim(line.substr(7, v - 7))), ValuationSpec::parse(trim(line.substr(v + 10)))};
  return r;
}

}  // namespace

std::string polygon_svg(const AnalysisReport& report) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 420;
  constexpr double kMargin = 60;
  std::vector<std::pair<std::size_t, double>> points;
  for (std::size_t i = 0; i < report.coefficient_values.size(); ++i) {
    const Value& v = report.coefficient_values[i];
    if (v.is_finite()) points.emplace_back(i, approx(v[0]));
  }
  double lo = 0;
  double hi = 1;
  if (!points.empty()) {
    lo = hi = points.front().second;
    for (const auto& [i, y] : points) {
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
  }
  if (hi - lo < 1) hi = lo + 1;
  const double n = std::max<double>(1, static_cast<double>(report.coefficient_values.size()) - 1);
  auto sx = [&](double i) { return kMargin + i * (kWidth - 2 * kMargin) / n; };
  auto sy = [&](double y) { return kHeight - kMargin - (y - lo) * (kHeight - 2 * kMargin) / (hi - lo); };

  std::ostringstream os;
  os << std::setprecision(6);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "  <title>" << xml_escape("Newton polygon of " + report.polynomial + " under " + report.valuation)
     << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
     << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\""
     << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  os << "  <text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">i</text>\n";
  os << "  <text x=\"15\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\">"
     << (report.coefficient_values.empty() || report.coefficient_values.back().rank() < 2 ? "v(a_i)"
                                                                                           : "v(a_i), first component")
     << "</text>\n";
  for (std::size_t i = 0; i < report.coefficient_values.size(); ++i) {
    os << "  <text x=\"" << sx(static_cast<double>(i)) << "\" y=\"" << kHeight - kMargin + 18
       << "\" text-anchor=\"middle\" font-size=\"11\">" << i << "</text>\n";
  }
  if (report.newton_polygon.vertices.size() >= 2) {
    os << "  <polyline class=\"hull\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& [i, v] : report.newton_polygon.vertices) {
      os << sx(static_cast<double>(i)) << "," << sy(approx(v[0])) << " ";
    }
    os << "\"/>\n";
  }
  for (const auto& [i, y] : points) {
    os << "  <circle class=\"point\" cx=\"" << sx(static_cast<double>(i)) << "\" cy=\"" << sy(y)
       << "\" r=\"3\" fill=\"gray\"/>\n";
  }
  for (const auto& [i, v] : report.newton_polygon.vertices) {
    os << "  <circle class=\"vertex\" cx=\"" << sx(static_cast<double>(i)) << "\" cy=\"" << sy(approx(v[0]))
       << "\" r=\"4\" fill=\"steelblue\"/>\n";
    os << "  <text class=\"label\" x=\"" << sx(static_cast<double>(i)) + 6 << "\" y=\""
       << sy(approx(v[0])) - 8 << "\" font-size=\"12\">" << xml_escape(std::to_string(i) + ": " + v.to_string())
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

int run(const CliConfig& config, std::string_view input, std::ostream& out, std::ostream& err) {
  try {
    const Resolved r = resolve(config);
    const AnalysisReport report = analyze_line(r, input, config);
    const Format format = config.subcommand == "polygon" && config.format == Format::kText ? Format::kSvg
                                                                                           : config.format;
    switch (format) {
      case Format::kText:
        out << to_text(report, config.all_pairs);
        break;
      case Format::kJson:
        out << to_json(report) << "\n";
        break;
      case Format::kSvg:
        out << polygon_svg(report);
        break;
    }
    return kOk;
  } catch (const Error& e) {
    report_error(err, input, e);
    return kUsageError;
  }
}

int batch(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::optional<Resolved> header;
  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      if (lines.empty() && !header) {
        header = parse_header(body);
        if (header) continue;
      }
      lines.emplace_back(line_no, body);
    }
  } catch (const Error& e) {
    err << "error: line " << line_no << ": " << e.what() << "\n";
    return kUsageError;
  }
  Resolved r;
  try {
    CliConfig effective = config;
    if (!effective.valuation && header) effective.valuation = header->valuation;
    if (!effective.domain && header) effective.domain = header->domain;
    if (lines.empty()) return kOk;
    r = resolve(effective);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::vector<std::string> records(lines.size());
  std::vector<char> failed(lines.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      try {
        records[i] = to_json(analyze_line(r, lines[i].second, config));
      } catch (const Error& e) {
        records[i] = error_json(lines[i].first, lines[i].second, e.what());
        failed[i] = 1;
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(lines.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  bool any_failed = false;
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << records[i] << "\n";
    if (failed[i]) {
      any_failed = true;
      err << "line " << lines[i].first << ": failed\n";
    }
  }
  return any_failed ? kPartialFailure : kOk;
}

int harness(const CliConfig& config, std::ostream& out, std::ostream& err) {
  oracle::HarnessConfig hc;
  try {
    if (config.config_file) hc = oracle::parse_harness_config(read_file(*config.config_file));
    if (config.valuation) hc.valuation = *config.valuation;
    if (config.domain) hc.domain = *config.domain;
    if (config.trials) hc.trials = *config.trials;
    if (config.seed_set) hc.seed = config.seed;
    hc.valuation.check_compatible(hc.effective_domain());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const auto result = oracle::soundness_harness(hc);
  const auto& s = result.summary;
  if (config.format == Format::kJson) {
    for (const auto& t : result.trials) {
      if (!t.passed) out << oracle::to_json(t) << "\n";
    }
    out << "{\"schema_version\":1,\"summary\":{\"trials\":" << s.trials << ",\"failures\":" << s.failures
        << ",\"theorem1_hits\":" << s.theorem1_hits << ",\"theorem2_hits\":" << s.theorem2_hits << ",\"delta_above_one\":" << s.delta_above_one
        << ",\"irreducible_verdicts\":" << s.irreducible_verdicts << ",\"seed\":" << hc.seed
        << ",\"valuation\":\"" << hc.valuation.to_string() << "\",\"domain\":\""
        << hc.effective_domain().to_string() << "\"}}\n";
  } else {
    out << "harness: valuation=" << hc.valuation.to_string() << " domain=" << hc.effective_domain().to_string()
        << " seed=" << hc.seed << "\n";
    out << "trials=" << s.trials << " failures=" << s.failures << " theorem1_hits=" << s.theorem1_hits
        << " theorem2_hits=" << s.theorem2_hits << " delta_above_one=" << s.delta_above_one << " irreducible_verdicts=" << s.irreducible_verdicts << "\n";
    for (const auto& t : result.trials) {
      if (!t.passed) out << oracle::to_json(t) << "\n";
    }
  }
  return s.failures == 0 ? kOk : kPartialFailure;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Valuation-based irreducibility certificates for polynomials in z"};
  app.require_subcommand(1);

  CliConfig config;
  std::string domain_text;
  std::string valuation_text;
  std::string format_text = "text";
  std::string expression;
  std::string config_file;
  std::size_t trials = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--domain", domain_text, "Q, Q(x), F(x,y):Q or F(x,y):p=<prime>");
    sub->add_option("--valuation", valuation_text, "p-adic:<p>, qx-rank2:<p> or monomial-lex");
    sub->add_option("--format", format_text, "text, json or svg")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    sub->add_option("--seed", config.seed, "random seed (KRULL_DUMAS_SEED overrides)")
        ->each([&](const std::string&) { config.seed_set = true; });
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Check both criteria on one polynomial");
  CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon as SVG");
  for (CLI::App* sub : {analyze, polygon}) {
    add_common(sub);
    auto* expr = sub->add_option("expression", expression, "polynomial in z");
    auto* file = sub->add_option("--file", config.file, "read the polynomial from a file");
    expr->excludes(file);
    file->excludes(expr);
    sub->add_flag("--strip-z0", config.strip_z0, "divide out the largest power of z first");
    sub->add_flag("--all-pairs", config.all_pairs, "list every qualifying (j, k)");
  }
  CLI::App* batch_cmd = app.add_subcommand("batch", "One JSON record per input line");
  add_common(batch_cmd);
  std::string batch_file;
  batch_cmd->add_option("file", batch_file, "input file, '-' for stdin")->required();
  batch_cmd->add_flag("--strip-z0", config.strip_z0, "divide out the largest power of z first");

  CLI::App* harness_cmd = app.add_subcommand("harness", "Random-product soundness harness");
  add_common(harness_cmd);
  harness_cmd->add_option("--config", config_file, "key = value harness configuration");
  harness_cmd->add_option("--trials", trials, "number of trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (!domain_text.empty()) config.domain = DomainTag::parse(domain_text);
    if (!valuation_text.empty()) config.valuation = ValuationSpec::parse(valuation_text);
    if (const char* env = std::getenv("KRULL_DUMAS_SEED"); env != nullptr && *env != '\0') {
      try {
        config.seed = std::stoull(env);
        config.seed_set = true;
      } catch (const std::exception&) {
        throw ConfigError(std::string("KRULL_DUMAS_SEED: not an unsigned integer: '") + env + "'");
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  config.format = format_text == "json" ? Format::kJson : format_text == "svg" ? Format::kSvg : Format::kText;

  if (analyze->parsed() || polygon->parsed()) {
    config.subcommand = analyze->parsed() ? "analyze" : "polygon";
    std::string input = expression;
    if (config.file) {
      try {
        input = trim(read_file(*config.file));
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
      }
    } else if (expression.empty()) {
      err << "error: expected a polynomial argument or --file\n";
      return kUsageError;
    }
    return run(config, input, out, err);
  }
  if (batch_cmd->parsed()) {
    config.subcommand = "batch";
    if (batch_file == "-") return batch(config, std::cin, out, err);
    std::ifstream in(batch_file);
    if (!in) {
      err << "error: cannot read '" << batch_file << "'\n";
      return kUsageError;
    }
    return batch(config, in, out, err);
  }
  config.subcommand = "harness";
  if (!config_file.empty()) config.config_file = config_file;
  if (trials != 0) config.trials = trials;
  return harness(config, out, err);
}

}  // namespace krull::cli
