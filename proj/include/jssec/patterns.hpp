#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "jssec/config.hpp"

namespace jssec {

/// Lower-cased identifier words: "userPassword" -> {user, password},
/// "API_KEY" -> {api, key}, "xmlHTTPRequest" -> {xml, http, request}.
std::vector<std::string> split_identifier(std::string_view name);

std::string to_lower(std::string_view s);

/// A PatternList compiled for word matching. Plain entries compare
/// case-insensitively against the whole word; "/re/" entries must match the
/// whole word.
class WordMatcher {
 public:
  WordMatcher() = default;
  explicit WordMatcher(const PatternList& list);

  bool matches(std::string_view word) const;

 private:
  std::vector<std::string> words_;
  std::vector<std::regex> regexes_;
};

/// A PatternList of dotted member paths. "a.b" matches exactly, "a.*" matches
/// anything below a. Comparison is case-sensitive.
class PathMatcher {
 public:
  PathMatcher() = default;
  explicit PathMatcher(const PatternList& list);

  bool matches(std::string_view path) const;
  /// True when some entry equals a trailing run of whole segments of path
  /// ("crypto.createHash" ends with "createHash").
  bool matches_suffix(std::string_view path) const;

 private:
  struct Entry {
    std::string path;
    bool subtree = false;
  };
  std::vector<Entry> entries_;
};

struct CompiledPatterns {
  explicit CompiledPatterns(const AnalyzerConfig& cfg);

  WordMatcher sensitive_names;
  WordMatcher sensitive_allowlist;
  std::vector<std::string> placeholders;
  WordMatcher weak_algorithms;
  PathMatcher crypto_sinks;
  PathMatcher debug_calls;
  PathMatcher dom_construction_calls;
  WordMatcher sanitizer_words;
  PathMatcher sanitizer_paths;
  PathMatcher taint_sources;
  PathMatcher fs_sinks;
  PathMatcher upload_fields;
  PathMatcher logger_paths;
  PathMatcher response_sinks;

  /// Identifier names that hold credentials (word-suffix match, minus the allowlist).
  bool is_sensitive_name(std::string_view name) const;
  /// Algorithm strings such as "SHA-1", "aes-128-ecb", "RC4".
  bool is_weak_algorithm(std::string_view value) const;
  /// Callee path of a sanitizer call ("DOMPurify.sanitize", "escapeHtml").
  bool is_sanitizer(std::string_view callee_path) const;
  bool is_placeholder(std::string_view value) const;
};

}  // namespace jssec
