#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jssec/config.hpp"
#include "jssec/finding.hpp"
#include "jssec/source.hpp"

namespace jssec {

inline constexpr const char* kToolName = "jssec";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kJsonSchemaVersion = "1.0";

/// Problems that are not findings: parse notes, suppression mistakes, rule crashes.
struct Diagnostic {
  std::string path;
  uint32_t line = 0;
  uint32_t col = 0;
  Severity severity = Severity::Info;
  std::string code;
  std::string message;
  std::string rule_id;
};

struct SkippedUnit {
  std::string path;
  std::string unit_id;
  std::string reason;
  uint32_t line = 0;
  uint32_t col = 0;
  /// Unrecoverable syntax error (as opposed to the minified-file gate).
  bool parse_error = false;
};

struct RuleStats {
  uint32_t findings = 0;
  uint32_t suppressed = 0;
  uint32_t crashes = 0;
};

struct AnalysisStats {
  uint32_t files = 0;
  uint32_t units = 0;
  uint32_t parsed_units = 0;
  std::map<std::string, RuleStats> rules;
  double wall_time_ms = 0;
};

struct AnalysisResult {
  std::vector<Finding> findings;
  std::vector<Finding> suppressed;
  std::vector<SkippedUnit> skipped;
  std::vector<Diagnostic> diagnostics;
  AnalysisStats stats;
  std::string config_digest;
  std::string profile;

  bool has_rule_crash() const;
  bool has_parse_failure() const;
};

/// A set of unit ids that share one global scope (the scripts of a page).
using PageGroup = std::vector<std::string>;

/// Runs every active rule over the units. Pages default to grouping units by
/// origin file.
AnalysisResult run_analysis(const std::vector<SourceUnit>& units, const AnalyzerConfig& cfg,
                            const std::vector<PageGroup>& pages = {});

/// Units of one file: the whole file for scripts, extracted regions for HTML.
std::vector<SourceUnit> units_for_file(std::shared_ptr<const SourceFile> file);

bool is_html_path(const std::string& path);

/// "likely minified/generated": more than 5 MB, or average line length above 5000.
bool looks_minified(const std::string& text);

struct DiscoveredFile {
  std::string display_path;  // relative to the working directory
  std::string fs_path;
};

/// Expands files, directories (recursively) and globs, in lexicographic order.
/// Unusable inputs are appended to `errors`.
std::vector<DiscoveredFile> discover_inputs(const std::vector<std::string>& inputs, const AnalyzerConfig& cfg,
                                            std::vector<std::string>& errors);

/// Reads, gates and analyzes files. "-" reads standard input as `<stdin>`.
AnalysisResult analyze_files(const std::vector<DiscoveredFile>& files, const AnalyzerConfig& cfg);

/// Analyzes one in-memory JavaScript or HTML document.
AnalysisResult analyze_text(const std::string& path, const std::string& text, const AnalyzerConfig& cfg);

/// Drops findings recorded in a previous JSON report. Throws std::runtime_error
/// when the baseline is not a report.
void apply_baseline(AnalysisResult& result, const std::string& baseline_json);

}  // namespace jssec
