#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "jssec/config.hpp"
#include "jssec/engine.hpp"
#include "jssec/mapping.hpp"
#include "jssec/metrics.hpp"
#include "jssec/parser.hpp"
#include "jssec/report.hpp"
#include "jssec/scope.hpp"

namespace py = pybind11;

namespace {

jssec::AnalyzerConfig make_config(const std::optional<std::string>& config_json,
                                  const std::optional<std::string>& profile) {
  auto cfg = jssec::AnalyzerConfig::defaults();
  if (config_json) jssec::merge_config_json(cfg, *config_json);
  if (profile) {
    auto p = jssec::parse_profile(*profile);
    if (!p) throw jssec::ConfigError("unknown profile: " + *profile);
    cfg.profile = *p;
  }
  return cfg;
}

std::string render(const jssec::AnalysisResult& r, const std::string& format, bool show_suppressed) {
  jssec::ReportOptions opts;
  opts.show_suppressed = show_suppressed;
  if (format == "json") return jssec::render_json(r, opts);
  if (format == "sarif") return jssec::render_sarif(r, opts);
  if (format == "text") return jssec::render_text(r, opts);
  throw py::value_error("format must be text, json or sarif");
}

py::list function_metrics(const std::string& text) {
  auto file = std::make_shared<const jssec::SourceFile>("<memory>", text);
  auto unit = jssec::SourceUnit::from_js_file(file);
  auto parsed = jssec::parse_source(unit);
  if (!parsed.ok()) {
    auto [line, col] = file->line_col(parsed.error->offset);
    throw py::value_error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                          parsed.error->message);
  }
  auto scopes = jssec::build_scope_table(*parsed.tree);
  py::list out;
  for (const auto& m : jssec::measure_functions(*parsed.tree, scopes, unit.line_offsets())) {
    py::dict d;
    d["name"] = m.name;
    d["params"] = m.parameter_count;
    d["logical_loc"] = m.logical_loc;
    d["line"] = unit.local_line(m.node->start);
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_jssec, m) {
  m.doc() = "JavaScript security code smell analyzer";
  m.attr("__version__") = jssec::kToolVersion;

  py::register_exception<jssec::ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def(
      "analyze_text",
      [](const std::string& text, const std::string& path, const std::optional<std::string>& config,
         const std::optional<std::string>& profile, const std::string& format, bool show_suppressed) {
        auto cfg = make_config(config, profile);
        jssec::AnalysisResult r;
        {
          py::gil_scoped_release release;
          r = jssec::analyze_text(path, text, cfg);
        }
        return render(r, format, show_suppressed);
      },
      py::arg("text"), py::arg("path") = "<stdin>", py::arg("config") = py::none(),
      py::arg("profile") = py::none(), py::arg("format") = "json", py::arg("show_suppressed") = false);

  m.def(
      "analyze_paths",
      [](const std::vector<std::string>& paths, const std::optional<std::string>& config,
         const std::optional<std::string>& profile, const std::string& format, bool show_suppressed) {
        auto cfg = make_config(config, profile);
        std::vector<std::string> errors;
        auto files = jssec::discover_inputs(paths, cfg, errors);
        if (!errors.empty()) throw py::value_error(errors.front());
        jssec::AnalysisResult r;
        {
          py::gil_scoped_release release;
          r = jssec::analyze_files(files, cfg);
        }
        return render(r, format, show_suppressed);
      },
      py::arg("paths"), py::arg("config") = py::none(), py::arg("profile") = py::none(),
      py::arg("format") = "json", py::arg("show_suppressed") = false);

  m.def("list_rules", [] {
    py::list out;
    for (const auto& r : jssec::rule_table()) {
      py::dict d;
      d["id"] = r.id;
      d["smell"] = r.smell;
      d["name"] = r.name;
      d["cwe"] = r.cwe_ids;
      d["cwe_text"] = r.cwe_text;
      d["owasp"] = r.owasp;
      d["severity"] = std::string(jssec::to_string(r.severity));
      d["tier"] = std::string(jssec::to_string(r.tier));
      d["hint"] = r.hint;
      out.append(d);
    }
    return out;
  });

  m.def("explain", [](const std::string& id) {
    const auto* r = jssec::find_rule(id);
    if (!r) throw py::key_error(id);
    return jssec::render_explanation(*r);
  });

  m.def("default_config", [] { return jssec::AnalyzerConfig::defaults().to_json(); });

  m.def("function_metrics", &function_metrics, py::arg("text"),
        "Per-function parameter count and logical lines of a script.");
}
