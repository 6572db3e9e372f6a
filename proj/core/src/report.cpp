#include "krull/report.hpp"

#include <sstream>

#include "json.hpp"

namespace krull {

using nlohmann::json;

namespace {

json value_json(const Value& v) {
  if (v.is_infinite()) return "inf";
  json out = json::array();
  for (const auto& c : v.components()) out.push_back(to_string(c));
  return out;
}

json trace_json(const std::vector<TraceEntry>& trace) {
  json out = json::array();
  for (const auto& t : trace) {
    out.push_back({{"hypothesis", t.hypothesis},
                   {"index", t.index},
                   {"reference", value_json(t.reference)},
                   {"scaled", value_json(t.scaled)},
                   {"outcome", to_string(t.outcome)}});
  }
  return out;
}

json theorem1_json(const Theorem1Report& r) {
  json checks = json::array();
  for (const auto& c : r.divisor_checks) checks.push_back({{"d", c.d}, {"in_dG", c.in_dG}});
  json pairs = json::array();
  for (const auto& p : r.all_valid_pairs) pairs.push_back({p.j, p.k});
  json out = {{"n", r.n},
              {"j", r.j},
              {"k", r.k},
              {"bound", r.bound},
              {"irreducible", r.irreducible},
              {"value_j", value_json(r.value_j)},
              {"value_k", value_json(r.value_k)},
              {"gamma", value_json(r.gamma)},
              {"trace", trace_json(r.trace)},
              {"vacuous_indices", r.vacuous_indices},
              {"divisor_checks", checks},
              {"all_valid_pairs", pairs},
              {"selection", r.selection}};
  out["gcd_value"] = r.gcd_value ? json(*r.gcd_value) : json(nullptr);
  return out;
}

json theorem2_json(const Theorem2Report& r) {
  json out = {{"n", r.n},
              {"j", r.j},
              {"d1", r.d1},
              {"delta_f", r.delta_f},
              {"left_slope", value_json(r.left_slope)},
              {"edges_convex", r.edges_convex},
              {"trace", trace_json(r.trace)},
              {"vacuous_indices", r.vacuous_indices}};
  out["d2"] = r.d2 ? json(*r.d2) : json(nullptr);
  out["right_slope"] = r.right_slope ? value_json(*r.right_slope) : json(nullptr);
  return out;
}

json polygon_json(const NewtonPolygon& np) {
  json vertices = json::array();
  for (const auto& [i, v] : np.vertices) vertices.push_back({{"index", i}, {"value", value_json(v)}});
  json segments = json::array();
  for (const auto& s : np.segments) {
    segments.push_back({{"start", s.start}, {"length", s.length}, {"slope", value_json(s.slope)}});
  }
  return {{"vertices", vertices}, {"segments", segments}};
}

json verdict_json(const Verdict& v) {
  json out = {{"kind", v.kind_name()}, {"text", v.to_string()}};
  out["bound"] = v.bound ? json(*v.bound) : json(nullptr);
  out["min_degree"] = v.min_degree ? json(*v.min_degree) : json(nullptr);
  return out;
}

std::string value_text(const Value& v) {
  if (v.is_infinite()) return "inf";
  std::string out = "[";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

void trace_text(std::ostream& os, const std::vector<TraceEntry>& trace) {
  for (const auto& t : trace) {
    os << "    (" << t.hypothesis << ") i=" << t.index << " reference=" << value_text(t.reference)
       << " scaled=" << value_text(t.scaled) << " outcome=" << to_string(t.outcome) << "\n";
  }
}

// Schema checking: each helper appends to `errs` with a dotted path.
struct Checker {
  std::vector<std::string> errs;

  bool need(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) {
      errs.push_back(path + "." + key + ": missing");
      return false;
    }
    return true;
  }
  void type(bool ok, const std::string& path, const char* what) {
    if (!ok) errs.push_back(path + ": expected " + what);
  }
  void value(const json& v, const std::string& path) {
    if (v.is_string()) {
      type(v == "inf", path, "\"inf\" or a component array");
      return;
    }
    type(v.is_array() && !v.empty(), path, "\"inf\" or a component array");
    if (!v.is_array()) return;
    for (const auto& c : v) type(c.is_string(), path, "rational strings");
  }
  void uint(const json& obj, const std::string& key, const std::string& path, bool nullable = false) {
    if (!need(obj, key, path)) return;
    const json& v = obj[key];
    type(v.is_number_unsigned() || (nullable && v.is_null()), path + "." + key, "unsigned integer");
  }
  void boolean(const json& obj, const std::string& key, const std::string& path) {
    if (need(obj, key, path)) type(obj[key].is_boolean(), path + "." + key, "boolean");
  }
  void string(const json& obj, const std::string& key, const std::string& path) {
    if (need(obj, key, path)) type(obj[key].is_string(), path + "." + key, "string");
  }
  void value_field(const json& obj, const std::string& key, const std::string& path, bool nullable = false) {
    if (!need(obj, key, path)) return;
    if (nullable && obj[key].is_null()) return;
    value(obj[key], path + "." + key);
  }
  void trace(const json& obj, const std::string& path) {
    if (!need(obj, "trace", path)) return;
    const json& t = obj["trace"];
    type(t.is_array(), path + ".trace", "array");
    if (!t.is_array()) return;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string p = path + ".trace[" + std::to_string(i) + "]";
      string(t[i], "hypothesis", p);
      uint(t[i], "index", p);
      value_field(t[i], "reference", p);
      value_field(t[i], "scaled", p);
      if (need(t[i], "outcome", p)) {
        const json& o = t[i]["outcome"];
        type(o == "less" || o == "equal" || o == "greater", p + ".outcome", "an ordering");
      }
    }
  }
  void uint_array(const json& obj, const std::string& key, const std::string& path) {
    if (!need(obj, key, path)) return;
    const json& a = obj[key];
    type(a.is_array(), path + "." + key, "array");
    if (!a.is_array()) return;
    for (const auto& e : a) type(e.is_number_unsigned(), path + "." + key, "unsigned integers");
  }
};

}  // namespace

std::string to_json(const AnalysisReport& r, int indent) {
  json out;
  out["schema_version"] = AnalysisReport::kSchemaVersion;
  out["polynomial"] = r.polynomial;
  out["domain"] = r.domain;
  out["valuation"] = r.valuation;
  out["degree"] = r.degree;
  out["stripped_z_power"] = r.stripped_z_power;
  json values = json::array();
  for (const auto& v : r.coefficient_values) values.push_back(value_json(v));
  out["coefficient_values"] = values;
  out["theorem1"] = r.theorem1 ? theorem1_json(*r.theorem1) : json(nullptr);
  out["corollary1_agrees"] = r.corollary1_agrees ? json(*r.corollary1_agrees) : json(nullptr);
  out["theorem2"] = r.theorem2 ? theorem2_json(*r.theorem2) : json(nullptr);
  out["theorem2_status"] = to_string(r.theorem2_status);
  out["theorem2_note"] = r.theorem2_note;
  out["verdict"] = verdict_json(r.verdict);
  out["newton_polygon"] = polygon_json(r.newton_polygon);
  return out.dump(indent);
}

std::string to_text(const AnalysisReport& r, bool all_pairs) {
  std::ostringstream os;
  os << "polynomial: " << r.polynomial << "\n";
  os << "domain: " << r.domain << "  valuation: " << r.valuation << "\n";
  os << "degree=" << r.degree << " stripped_z_power=" << r.stripped_z_power << "\n";
  os << "coefficient values:\n";
  for (std::size_t i = 0; i < r.coefficient_values.size(); ++i) {
    os << "  v(a" << i << ")=" << value_text(r.coefficient_values[i]) << "\n";
  }
  if (r.theorem1) {
    const auto& t = *r.theorem1;
    os << "theorem1: j=" << t.j << " k=" << t.k << " bound=" << t.bound
       << " irreducible=" << (t.irreducible ? "true" : "false") << "\n";
    os << "  value_j=" << value_text(t.value_j) << " value_k=" << value_text(t.value_k)
       << " gamma=" << value_text(t.gamma) << "\n";
    trace_text(os, t.trace);
    for (const auto& c : t.divisor_checks) {
      os << "    (iv) d=" << c.d << " in_dG=" << (c.in_dG ? "true" : "false") << "\n";
    }
    if (t.gcd_value) os << "    (iv) gcd=" << *t.gcd_value << "\n";
    os << "  selection: " << t.selection << "\n";
    if (all_pairs) {
      os << "  all_valid_pairs:";
      for (const auto& p : t.all_valid_pairs) os << " (" << p.j << "," << p.k << ")";
      os << "\n";
    }
  } else {
    os << "theorem1: no qualifying pair\n";
  }
  if (r.corollary1_agrees) os << "corollary1_agrees=" << (*r.corollary1_agrees ? "true" : "false") << "\n";
  if (r.theorem2) {
    const auto& t = *r.theorem2;
    os << "theorem2: j=" << t.j << " d1=" << t.d1;
    if (t.d2) os << " d2=" << *t.d2;
    os << " delta_f=" << t.delta_f << "\n";
    os << "  left_slope=" << value_text(t.left_slope);
    if (t.right_slope) os << " right_slope=" << value_text(*t.right_slope);
    os << " edges_convex=" << (t.edges_convex ? "true" : "false") << "\n";
    trace_text(os, t.trace);
  } else {
    os << "theorem2: " << to_string(r.theorem2_status);
    if (!r.theorem2_note.empty()) os << " (" << r.theorem2_note << ")";
    os << "\n";
  }
  os << "newton polygon:";
  for (const auto& [i, v] : r.newton_polygon.vertices) os << " (" << i << "," << value_text(v) << ")";
  os << "\n";
  for (const auto& s : r.newton_polygon.segments) {
    os << "  segment start=" << s.start << " length=" << s.length << " slope=" << value_text(s.slope) << "\n";
  }
  os << "verdict: " << r.verdict.to_string() << "\n";
  return os.str();
}

std::vector<std::string> validate_report_json(std::string_view text) {
  Checker c;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    return {std::string("not JSON: ") + e.what()};
  }
  const std::string root = "$";
  if (!doc.is_object()) return {"$: expected object"};
  if (c.need(doc, "schema_version", root) && doc["schema_version"] != AnalysisReport::kSchemaVersion) {
    c.errs.push_back("$.schema_version: expected 1");
  }
  c.string(doc, "polynomial", root);
  c.string(doc, "domain", root);
  c.string(doc, "valuation", root);
  c.uint(doc, "degree", root);
  c.uint(doc, "stripped_z_power", root);
  if (c.need(doc, "coefficient_values", root)) {
    const json& a = doc["coefficient_values"];
    c.type(a.is_array(), "$.coefficient_values", "array");
    if (a.is_array()) {
      if (doc["degree"].is_number_unsigned() && a.size() != doc["degree"].get<std::size_t>() + 1) {
        c.errs.push_back("$.coefficient_values: length must be degree + 1");
      }
      for (const auto& v : a) c.value(v, "$.coefficient_values[]");
    }
  }
  if (c.need(doc, "theorem1", root) && !doc["theorem1"].is_null()) {
    const json& t = doc["theorem1"];
    const std::string p = "$.theorem1";
    for (const char* k : {"n", "j", "k", "bound"}) c.uint(t, k, p);
    c.uint(t, "gcd_value", p, true);
    c.boolean(t, "irreducible", p);
    for (const char* k : {"value_j", "value_k", "gamma"}) c.value_field(t, k, p);
    c.trace(t, p);
    c.uint_array(t, "vacuous_indices", p);
    c.string(t, "selection", p);
    if (c.need(t, "divisor_checks", p)) {
      for (const auto& d : t["divisor_checks"]) {
        c.uint(d, "d", p + ".divisor_checks[]");
        c.boolean(d, "in_dG", p + ".divisor_checks[]");
      }
    }
    if (c.need(t, "all_valid_pairs", p)) {
      for (const auto& pr : t["all_valid_pairs"]) {
        c.type(pr.is_array() && pr.size() == 2 && pr[0].is_number_unsigned() && pr[1].is_number_unsigned(),
               p + ".all_valid_pairs[]", "[j, k]");
      }
    }
    if (t["n"].is_number_unsigned() && t["j"].is_number_unsigned() && t["k"].is_number_unsigned() &&
        t["bound"].is_number_unsigned() &&
        t["bound"].get<std::size_t>() + t["j"].get<std::size_t>() !=
            t["n"].get<std::size_t>() + t["k"].get<std::size_t>()) {
      c.errs.push_back(p + ".bound: must equal n - j + k");
    }
  }
  if (c.need(doc, "corollary1_agrees", root)) {
    c.type(doc["corollary1_agrees"].is_null() || doc["corollary1_agrees"].is_boolean(), "$.corollary1_agrees",
           "boolean or null");
  }
  if (c.need(doc, "theorem2", root) && !doc["theorem2"].is_null()) {
    const json& t = doc["theorem2"];
    const std::string p = "$.theorem2";
    for (const char* k : {"n", "j", "d1", "delta_f"}) c.uint(t, k, p);
    c.uint(t, "d2", p, true);
    c.value_field(t, "left_slope", p);
    c.value_field(t, "right_slope", p, true);
    c.boolean(t, "edges_convex", p);
    c.trace(t, p);
    c.uint_array(t, "vacuous_indices", p);
  }
  if (c.need(doc, "theorem2_status", root)) {
    const json& s = doc["theorem2_status"];
    c.type(s == "satisfied" || s == "not_satisfied" || s == "inapplicable", "$.theorem2_status", "a status");
  }
  c.string(doc, "theorem2_note", root);
  if (c.need(doc, "verdict", root)) {
    const json& v = doc["verdict"];
    c.string(v, "kind", "$.verdict");
    c.string(v, "text", "$.verdict");
    c.uint(v, "bound", "$.verdict", true);
    c.uint(v, "min_degree", "$.verdict", true);
    if (v.contains("kind")) {
      const json& k = v["kind"];
      c.type(k == "Irreducible" || k == "TwoFactorBound" || k == "MinFactorDegree" || k == "Both" ||
                 k == "Inconclusive",
             "$.verdict.kind", "a verdict kind");
    }
  }
  if (c.need(doc, "newton_polygon", root)) {
    const json& np = doc["newton_polygon"];
    if (c.need(np, "vertices", "$.newton_polygon")) {
      for (const auto& v : np["vertices"]) {
        c.uint(v, "index", "$.newton_polygon.vertices[]");
        c.value_field(v, "value", "$.newton_polygon.vertices[]");
      }
    }
    if (c.need(np, "segments", "$.newton_polygon")) {
      for (const auto& s : np["segments"]) {
        c.uint(s, "start", "$.newton_polygon.segments[]");
        c.uint(s, "length", "$.newton_polygon.segments[]");
        c.value_field(s, "slope", "$.newton_polygon.segments[]");
      }
    }
  }
  return c.errs;
}

std::string error_json(std::size_t line, std::string_view input, std::string_view message) {
  json out = {{"schema_version", AnalysisReport::kSchemaVersion},
              {"line", line},
              {"input", std::string(input)},
              {"error", std::string(message)}};
  return out.dump();
}

}  // namespace krull
