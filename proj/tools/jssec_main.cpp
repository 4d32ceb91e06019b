#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jssec/config.hpp"
#include "jssec/engine.hpp"
#include "jssec/mapping.hpp"
#include "jssec/report.hpp"

namespace {

enum Exit { kClean = 0, kFindings = 1, kUsage = 2, kConfig = 3, kCrash = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects JavaScript security code smells in .js and .html sources."};
  app.set_version_flag("--version", std::string(jssec::kToolName) + " " + jssec::kToolVersion);

  std::vector<std::string> inputs;
  std::string format = "text";
  std::string config_path;
  std::string profile;
  std::string fail_level = "warning";
  std::string explain;
  std::string baseline;
  std::string color = "auto";
  bool list_rules = false;
  bool show_suppressed = false;
  bool timing = false;
  bool strict_parse = false;
  bool strict_http = false;
  bool include_minified = false;
  bool print_config = false;
  bool print_schema = false;

  app.add_option("inputs", inputs, "Files, directories or globs; - reads standard input");
  app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json", "sarif"}));
  app.add_option("-c,--config", config_path, "Config file (default: $JSSEC_CONFIG)");
  app.add_option("--profile", profile, "Rule profile")->check(CLI::IsMember({"all", "client", "server"}));
  app.add_option("--fail-level", fail_level, "Lowest severity that makes the exit code 1")
      ->check(CLI::IsMember({"info", "warning", "error", "none"}));
  app.add_flag("--list-rules", list_rules, "Print the rule mapping table");
  app.add_option("--explain", explain, "Describe one rule, e.g. JSSEC-019");
  app.add_option("--baseline", baseline, "Hide findings already present in this JSON report");
  app.add_flag("--show-suppressed", show_suppressed, "Also print findings silenced by comments");
  app.add_flag("--timing", timing, "Report wall time");
  app.add_flag("--strict-parse", strict_parse, "Fail when a unit cannot be parsed");
  app.add_flag("--strict-http", strict_http, "Report every http:// literal, not only request-like uses");
  app.add_flag("--include-minified", include_minified, "Analyze files that look minified or generated");
  app.add_option("--color", color, "Colorize text output")->check(CLI::IsMember({"auto", "always", "never"}));
  app.add_flag("--print-config", print_config, "Print the effective configuration as JSON");
  app.add_flag("--print-config-schema", print_schema, "Print the config file JSON schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (list_rules) {
    std::cout << jssec::render_rule_list();
    return kClean;
  }
  if (!explain.empty()) {
    const jssec::RuleInfo* rule = jssec::find_rule(explain);
    if (rule == nullptr) {
      std::cerr << "jssec: unknown rule " << explain << "\n";
      return kUsage;
    }
    std::cout << jssec::render_explanation(*rule);
    return kClean;
  }
  if (print_schema) {
    std::cout << jssec::config_schema();
    return kClean;
  }

  jssec::AnalyzerConfig cfg;
  try {
    cfg = jssec::load_config(config_path.empty() ? std::nullopt : std::optional<std::string>(config_path));
  } catch (const jssec::ConfigError& e) {
    std::cerr << "jssec: config error: " << e.what() << "\n";
    return kConfig;
  }
  for (const auto& w : cfg.warnings) std::cerr << "jssec: config warning: " << w << "\n";
  if (!profile.empty()) cfg.profile = *jssec::parse_profile(profile);
  cfg.strict_parse = cfg.strict_parse || strict_parse;
  cfg.strict_http = cfg.strict_http || strict_http;
  cfg.include_minified = cfg.include_minified || include_minified;

  if (print_config) {
    std::cout << cfg.to_json() << "\n";
    return kClean;
  }
  if (inputs.empty()) {
    std::cerr << "jssec: no inputs given\n" << app.help();
    return kUsage;
  }

  std::vector<std::string> errors;
  auto files = jssec::discover_inputs(inputs, cfg, errors);
  if (!errors.empty()) {
    for (const auto& e : errors) std::cerr << "jssec: " << e << "\n";
    return kUsage;
  }

  jssec::AnalysisResult result = jssec::analyze_files(files, cfg);
  if (!baseline.empty()) {
    try {
      jssec::apply_baseline(result, read_file(baseline));
    } catch (const std::exception& e) {
      std::cerr << "jssec: baseline: " << e.what() << "\n";
      return kUsage;
    }
  }

  jssec::ReportOptions opts;
  opts.show_suppressed = show_suppressed;
  opts.timing = timing;
  opts.color = color == "always" || (color == "auto" && format == "text" && isatty(STDOUT_FILENO) != 0);
  if (format == "json") std::cout << jssec::render_json(result, opts);
  else if (format == "sarif") std::cout << jssec::render_sarif(result, opts);
  else std::cout << jssec::render_text(result, opts);
  std::cout.flush();

  if (result.has_rule_crash()) return kCrash;
  if (fail_level != "none") {
    auto threshold = *jssec::parse_severity(fail_level);
    for (const auto& f : result.findings) {
      if (f.severity >= threshold) return kFindings;
    }
  }
  if (cfg.strict_parse && result.has_parse_failure()) return kFindings;
  return kClean;
}
