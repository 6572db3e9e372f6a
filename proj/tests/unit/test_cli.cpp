#include <cstdlib>
#include <sstream>

#include "../support/fixtures.hpp"
#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "krull/report.hpp"

using namespace krull;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "krull-dumas");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Outcome run_batch(const std::string& text, cli::CliConfig config = {}) {
  std::istringstream in(text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::batch(config, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("analyze text output on P1, P2, P3") {
    const auto a = invoke({"analyze", "--domain", "Q(x)", "--valuation", "qx-rank2:2", fixtures::kP1});
    CHECK(a.code == cli::kOk);
    CHECK(has_line(a.out, "theorem1: j=5 k=0 bound=1 irreducible=false"));
    CHECK(has_line(a.out, "verdict: TwoFactorBound(1)"));
    const auto b = invoke({"analyze", "--domain", "F(x,y):Q", "--valuation", "monomial-lex", fixtures::kP2});
    CHECK(has_line(b.out, "theorem1: j=6 k=1 bound=2 irreducible=false"));
    const auto c = invoke({"analyze", "--valuation", "monomial-lex", fixtures::kP3});
    CHECK(c.code == cli::kOk);
    CHECK(has_line(c.out, "verdict: MinFactorDegree(2)"));
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({"analyze", "--domain", "Q", "--valuation", "p-adic:2", "z^2 + 2*z + 2"}).code == cli::kOk);
    // Inconclusive is still a successful run.
    const auto inc = invoke({"analyze", "--domain", "Q", "--valuation", "p-adic:2", "z^2 - 1"});
    CHECK(inc.code == cli::kOk);
    CHECK(has_line(inc.out, "verdict: Inconclusive"));
    const auto bad = invoke({"analyze", "--domain", "Q", "--valuation", "p-adic:2", "z^2 + 2z"});
    CHECK(bad.code == cli::kUsageError);
    CHECK(bad.err.find("column 8") != std::string::npos);
    CHECK(bad.err.find("       ^") != std::string::npos);
    CHECK(invoke({"analyze", "--domain", "Q", "--valuation", "p-adic:4", "z"}).code == cli::kUsageError);
    CHECK(invoke({"analyze", "--domain", "Q", "--valuation", "qx-rank2:2", "z"}).code == cli::kUsageError);
    CHECK(invoke({"frobnicate"}).code == cli::kUsageError);
    CHECK(invoke({"--help"}).code == cli::kOk);
  }

  TEST_CASE("json report round trip and schema") {
    const auto r = invoke({"analyze", "--format", "json", "--domain", "Q(x)", "--valuation", "qx-rank2:2", fixtures::kP1});
    REQUIRE(r.code == cli::kOk);
    CHECK(validate_report_json(r.out).empty());
    const auto j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["theorem1"]["bound"] == 1);
    CHECK(j["theorem1"]["j"] == 5);
    CHECK(j["verdict"]["text"] == "TwoFactorBound(1)");
    CHECK(j["coefficient_values"][0] == json::array({"0", "-1"}));
    CHECK(j["degree"] == 6);
    CHECK(validate_report_json("{\"schema_version\":1}").size() > 0);
    CHECK(validate_report_json("not json").size() > 0);
  }

  TEST_CASE("text and json agree on the numbers") {
    for (const char* e : {"z^5 + 2", "z^3 + 4", "z^4 + 2*z^3 + 4*z + 8", "z^2 + 2*z + 2"}) {
      const auto report = analyze_expression(e, DomainTag::parse("Q"), ValuationSpec::parse("p-adic:2"));
      const auto j = json::parse(to_json(report));
      const std::string text = to_text(report);
      CHECK(validate_report_json(to_json(report, 2)).empty());
      CHECK(has_line(text, "verdict: " + j["verdict"]["text"].get<std::string>()));
      if (report.theorem1) {
        CHECK(has_line(text, "theorem1: j=" + std::to_string(j["theorem1"]["j"].get<int>()) +
                                 " k=" + std::to_string(j["theorem1"]["k"].get<int>()) +
                                 " bound=" + std::to_string(j["theorem1"]["bound"].get<int>()) +
                                 " irreducible=" + (j["theorem1"]["irreducible"].get<bool>() ? "true" : "false")));
      }
      if (report.theorem2) {
        CHECK(text.find("delta_f=" + std::to_string(j["theorem2"]["delta_f"].get<int>())) != std::string::npos);
      }
    }
  }

  TEST_CASE("batch mode") {
    const auto ok = run_batch("domain=Q valuation=p-adic:2\n# comment\n\nz^2 + 2*z + 2\nz^2 - 1\nz^5 + 2\n");
    CHECK(ok.code == cli::kOk);
    const auto recs = json_lines(ok.out);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0]["verdict"]["text"] == "Irreducible");
    CHECK(recs[1]["verdict"]["text"] == "Inconclusive");
    CHECK(recs[2]["polynomial"] == "2 + z^5");

    CHECK(run_batch("").code == cli::kOk);
    CHECK(run_batch("").out.empty());

    const auto mixed = run_batch("domain=Q valuation=p-adic:3\nz^2 + 3\nz^2 + 3z\nz^3 - 3\n");
    CHECK(mixed.code == cli::kPartialFailure);
    const auto m = json_lines(mixed.out);
    REQUIRE(m.size() == 3);
    CHECK(m[1].contains("error"));
    CHECK(m[1]["line"] == 3);
    CHECK(m[1]["input"] == "z^2 + 3z");
    CHECK(m[2]["verdict"]["text"] == "Irreducible");

    cli::CliConfig override;
    override.valuation = ValuationSpec::parse("p-adic:3");
    const auto o = json_lines(run_batch("domain=Q valuation=p-adic:2\nz^2 + 3\n", override).out);
    REQUIRE(o.size() == 1);
    CHECK(o[0]["valuation"] == "p-adic:3");
  }

  TEST_CASE("polygon svg") {
    const auto r = invoke({"polygon", "--valuation", "monomial-lex", fixtures::kP3});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.rfind("<?xml", 0) == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
    CHECK(r.out.find("<polyline") != std::string::npos);
    auto count = [&](const std::string& needle) {
      std::size_t n = 0;
      for (std::size_t at = r.out.find(needle); at != std::string::npos; at = r.out.find(needle, at + 1)) ++n;
      return n;
    };
    CHECK(count("class=\"point\"") == 5);
    CHECK(count("class=\"vertex\"") == 3);
    CHECK(r.out.find("2: (0, 0)") != std::string::npos);
  }

  TEST_CASE("seed environment variable wins") {
    const auto base = invoke({"harness", "--format", "json", "--valuation", "p-adic:3", "--trials", "5", "--seed", "9"});
    REQUIRE(base.code == cli::kOk);
    CHECK(json_lines(base.out).back()["summary"]["seed"] == 9);
    ::setenv("KRULL_DUMAS_SEED", "123", 1);
    const auto env = invoke({"harness", "--format", "json", "--valuation", "p-adic:3", "--trials", "5", "--seed", "9"});
    ::unsetenv("KRULL_DUMAS_SEED");
    REQUIRE(env.code == cli::kOk);
    CHECK(json_lines(env.out).back()["summary"]["seed"] == 123);
    CHECK(json_lines(env.out).back()["summary"]["trials"] == 5);
  }
}
