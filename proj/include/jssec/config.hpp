#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "jssec/finding.hpp"

namespace jssec {

enum class Profile : uint8_t { All, Client, Server };
enum class ThresholdSource : uint8_t { PaperCited, Default };

std::string_view to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view s);
std::string_view to_string(ThresholdSource s);

struct Threshold {
  std::string name;
  uint32_t value = 0;
  ThresholdSource source = ThresholdSource::Default;
};

/// Case-insensitive words, or regular expressions written as "/.../".
struct PatternList {
  std::string name;
  std::vector<std::string> entries;
};

struct RuleSettings {
  bool enabled = true;
  std::optional<Severity> severity;
  /// Path globs (relative to the working directory) where the rule does not run.
  std::vector<std::string> excludes;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyzerConfig {
  std::map<std::string, RuleSettings> rules;  // all 24 ids present
  std::map<std::string, Threshold> thresholds;
  std::map<std::string, PatternList> pattern_lists;
  Profile profile = Profile::All;
  std::vector<std::string> path_excludes;
  bool strict_parse = false;
  bool strict_http = false;
  bool include_minified = false;
  /// Non-fatal problems found while loading (unknown keys and the like).
  std::vector<std::string> warnings;

  static AnalyzerConfig defaults();

  uint32_t threshold(const std::string& name) const;
  const PatternList& list(const std::string& name) const;

  /// Enabled in settings and not switched off by the profile.
  bool rule_active(const std::string& id) const;
  bool rule_excluded_for(const std::string& id, const std::string& path) const;

  /// Effective configuration as JSON text (keys sorted).
  std::string to_json() const;

  /// FNV-1a 64 of to_json(), as 16 hex digits.
  std::string digest() const;
};

/// Threshold names in a fixed order.
const std::vector<std::string>& threshold_names();

/// Pattern list names in a fixed order.
const std::vector<std::string>& pattern_list_names();

/// Applies a JSON config document on top of cfg. Throws ConfigError.
void merge_config_json(AnalyzerConfig& cfg, const std::string& json_text);

/// Defaults merged with the file at `path` (or $JSSEC_CONFIG when path is
/// empty and the variable is set). Throws ConfigError.
AnalyzerConfig load_config(const std::optional<std::string>& path);

/// JSON schema of the config file.
const std::string& config_schema();

}  // namespace jssec
