#include "jssec/report.hpp"

#include <cstdio>
#include <map>

#include <json.hpp>

#include "jssec/mapping.hpp"
#include "jssec/patterns.hpp"

namespace jssec {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

const char* color_of(Severity s) {
  switch (s) {
    case Severity::Error: return "\x1b[31m";
    case Severity::Warning: return "\x1b[33m";
    case Severity::Info: return "\x1b[36m";
  }
  return "";
}

std::string location(const Span& s) {
  return std::to_string(s.start_line) + ":" + std::to_string(s.start_col);
}

void text_finding(std::string& out, const Finding& f, const ReportOptions& opts) {
  std::string sev(to_string(f.severity));
  if (opts.color) sev = color_of(f.severity) + sev + "\x1b[0m";
  out += f.path + ":" + location(f.span) + " " + f.rule_id + " " + sev + " " + f.message + " [" +
         join(f.cwe_ids, ",") + "] (OWASP: " + f.owasp_category + ")\n";
  for (const auto& step : f.chain) {
    out += "    " + step.role + ": " + location(step.span) + " " + step.label + "\n";
  }
  for (const auto& n : f.notes) out += "    note: " + n + "\n";
  if (!f.suppression_reason.empty()) out += "    suppressed: " + f.suppression_reason + "\n";
}

}  // namespace

std::string render_text(const AnalysisResult& result, const ReportOptions& opts) {
  std::string out;
  std::string current;
  auto emit_group = [&](const std::vector<Finding>& list) {
    for (const auto& f : list) {
      if (f.path != current) {
        if (!current.empty()) out += "\n";
        current = f.path;
      }
      text_finding(out, f, opts);
    }
  };
  emit_group(result.findings);
  if (opts.show_suppressed && !result.suppressed.empty()) {
    if (!out.empty()) out += "\n";
    out += "suppressed:\n";
    current.clear();
    emit_group(result.suppressed);
  }
  for (const auto& s : result.skipped) {
    if (out.size() > 0 && out.back() != '\n') out += "\n";
    out += "skipped " + s.path + (s.line > 0 ? ":" + std::to_string(s.line) + ":" + std::to_string(s.col) : "") +
           ": " + s.reason + "\n";
  }
  for (const auto& d : result.diagnostics) {
    if (d.severity == Severity::Info) continue;
    out += std::string(to_string(d.severity)) + " " + (d.path.empty() ? "" : d.path + ": ") + d.message + "\n";
  }
  if (!out.empty()) out += "\n";

  size_t n = result.findings.size();
  std::map<Severity, size_t> by_sev;
  for (const auto& f : result.findings) by_sev[f.severity]++;
  out += std::to_string(n) + (n == 1 ? " finding" : " findings");
  if (n > 0) {
    out += " (" + std::to_string(by_sev[Severity::Error]) + " error, " + std::to_string(by_sev[Severity::Warning]) +
           " warning, " + std::to_string(by_sev[Severity::Info]) + " info)";
  }
  if (!result.suppressed.empty()) out += ", " + std::to_string(result.suppressed.size()) + " suppressed";
  out += "\n";
  for (const auto& [id, st] : result.stats.rules) {
    if (st.findings == 0) continue;
    const RuleInfo* r = find_rule(id);
    out += "  " + id + " " + std::to_string(st.findings) + "  " + (r ? r->name : "") + "\n";
  }
  if (opts.timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", result.stats.wall_time_ms);
    out += "analyzed " + std::to_string(result.stats.units) + " units in " + buf + " ms\n";
  }
  return out;
}

namespace {

json span_json(const Span& s) {
  return {{"unit_id", s.unit_id},   {"start_byte", s.start_byte}, {"end_byte", s.end_byte},
          {"start_line", s.start_line}, {"start_col", s.start_col},   {"end_line", s.end_line},
          {"end_col", s.end_col}};
}

json finding_json(const Finding& f) {
  json chain = json::array();
  for (const auto& c : f.chain) chain.push_back({{"role", c.role}, {"label", c.label}, {"span", span_json(c.span)}});
  json j = {{"rule_id", f.rule_id},
            {"rule_name", f.rule_name},
            {"sub_code", f.sub_code},
            {"path", f.path},
            {"span", span_json(f.span)},
            {"message", f.message},
            {"severity", std::string(to_string(f.severity))},
            {"cwe_ids", f.cwe_ids},
            {"owasp_category", f.owasp_category},
            {"hint", f.hint},
            {"chain", chain},
            {"notes", f.notes}};
  if (!f.suppression_reason.empty()) j["suppression_reason"] = f.suppression_reason;
  return j;
}

}  // namespace

std::string render_json(const AnalysisResult& result, const ReportOptions& opts) {
  json j;
  j["schema_version"] = kJsonSchemaVersion;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["config_digest"] = result.config_digest;
  j["profile"] = result.profile;
  json findings = json::array();
  for (const auto& f : result.findings) findings.push_back(finding_json(f));
  j["findings"] = findings;
  if (opts.show_suppressed) {
    json sup = json::array();
    for (const auto& f : result.suppressed) sup.push_back(finding_json(f));
    j["suppressed"] = sup;
  }
  json skipped = json::array();
  for (const auto& s : result.skipped) {
    skipped.push_back({{"path", s.path}, {"unit_id", s.unit_id}, {"reason", s.reason}, {"line", s.line},
                       {"col", s.col}});
  }
  j["skipped"] = skipped;
  json diags = json::array();
  for (const auto& d : result.diagnostics) {
    diags.push_back({{"path", d.path}, {"line", d.line}, {"col", d.col},
                     {"severity", std::string(to_string(d.severity))}, {"code", d.code}, {"message", d.message},
                     {"rule_id", d.rule_id}});
  }
  j["diagnostics"] = diags;
  json rules = json::object();
  for (const auto& [id, st] : result.stats.rules) {
    rules[id] = {{"findings", st.findings}, {"suppressed", st.suppressed}, {"crashes", st.crashes}};
  }
  j["stats"] = {{"files", result.stats.files},
                {"units", result.stats.units},
                {"parsed_units", result.stats.parsed_units},
                {"findings", result.findings.size()},
                {"suppressed", result.suppressed.size()},
                {"rules", rules}};
  if (opts.timing) j["stats"]["wall_time_ms"] = result.stats.wall_time_ms;
  return j.dump(2) + "\n";
}

namespace {

const char* sarif_level(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "note";
  }
  return "warning";
}

std::string uri_encode(const std::string& path) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : path) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' || c == '/') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 15]);
    }
  }
  return out;
}

json physical(const std::string& path, const Span& s) {
  return {{"artifactLocation", {{"uri", uri_encode(path)}}},
          {"region",
           {{"startLine", s.start_line}, {"startColumn", s.start_col}, {"endLine", s.end_line},
            {"endColumn", s.end_col}, {"charOffset", s.start_byte}, {"charLength", s.end_byte - s.start_byte}}}};
}

json sarif_result(const Finding& f, const std::map<std::string, size_t>& index) {
  json r = {{"ruleId", f.rule_id},
            {"ruleIndex", index.at(f.rule_id)},
            {"level", sarif_level(f.severity)},
            {"message", {{"text", f.message}}},
            {"locations", json::array({{{"physicalLocation", physical(f.path, f.span)}}})}};
  json props = {{"cwe", f.cwe_ids}, {"owasp", f.owasp_category}, {"hint", f.hint}};
  if (!f.sub_code.empty()) props["subCode"] = f.sub_code;
  if (!f.notes.empty()) props["notes"] = f.notes;
  r["properties"] = props;
  if (!f.chain.empty()) {
    json locs = json::array();
    for (const auto& c : f.chain) {
      locs.push_back({{"location",
                       {{"physicalLocation", physical(f.path, c.span)}, {"message", {{"text", c.role + ": " + c.label}}}}},
                      {"kinds", json::array({c.role})}});
    }
    r["codeFlows"] = json::array({{{"threadFlows", json::array({{{"locations", locs}}})}}});
  }
  if (!f.suppression_reason.empty()) {
    r["suppressions"] = json::array({{{"kind", "inSource"}, {"justification", f.suppression_reason}}});
  }
  return r;
}

}  // namespace

std::string render_sarif(const AnalysisResult& result, const ReportOptions& opts) {
  json rules = json::array();
  std::map<std::string, size_t> index;
  for (const auto& r : rule_table()) {
    index[r.id] = rules.size();
    json tags = json::array({"security"});
    for (const auto& c : r.cwe_ids) tags.push_back("external/cwe/" + to_lower(c));
    rules.push_back({{"id", r.id},
                     {"name", r.name},
                     {"shortDescription", {{"text", r.short_description}}},
                     {"fullDescription", {{"text", r.explanation}}},
                     {"help", {{"text", r.hint}}},
                     {"defaultConfiguration", {{"level", sarif_level(r.severity)}}},
                     {"properties",
                      {{"tags", tags}, {"cwe", r.cwe_ids}, {"cweText", r.cwe_text}, {"owasp", r.owasp},
                       {"smell", r.smell}, {"tier", std::string(to_string(r.tier))}}}});
  }
  json results = json::array();
  for (const auto& f : result.findings) results.push_back(sarif_result(f, index));
  if (opts.show_suppressed) {
    for (const auto& f : result.suppressed) results.push_back(sarif_result(f, index));
  }
  json notifications = json::array();
  for (const auto& s : result.skipped) {
    json n = {{"level", "note"}, {"message", {{"text", "skipped " + s.unit_id + ": " + s.reason}}}};
    if (s.line > 0) {
      n["locations"] = json::array({{{"physicalLocation",
                                      {{"artifactLocation", {{"uri", uri_encode(s.path)}}},
                                       {"region", {{"startLine", s.line}, {"startColumn", s.col}}}}}}});
    }
    notifications.push_back(n);
  }
  for (const auto& d : result.diagnostics) {
    notifications.push_back({{"level", sarif_level(d.severity)},
                             {"message", {{"text", (d.path.empty() ? "" : d.path + ": ") + d.message}}},
                             {"descriptor", {{"id", d.code}}}});
  }
  json invocation = {{"executionSuccessful", !result.has_rule_crash()}};
  if (!notifications.empty()) invocation["toolExecutionNotifications"] = notifications;
  json driver = {{"name", kToolName},
                 {"version", kToolVersion},
                 {"semanticVersion", kToolVersion},
                 {"rules", rules}};
  json run = {{"tool", {{"driver", driver}}},
              {"results", results},
              {"invocations", json::array({invocation})},
              {"columnKind", "unicodeCodePoints"},
              {"properties", {{"configDigest", result.config_digest}, {"profile", result.profile}}}};
  json log = {{"$schema", "https://json.schemastore.org/sarif-2.1.0.json"},
              {"version", "2.1.0"},
              {"runs", json::array({run})}};
  return log.dump(2) + "\n";
}

}  // namespace jssec
