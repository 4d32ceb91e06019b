#include "jssec/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace jssec {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split_identifier(std::string_view name) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(to_lower(cur));
    cur.clear();
  };
  auto upper = [](char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; };
  auto lower = [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; };
  for (size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (c == '_' || c == '-' || c == '$' || c == ' ' || c == '.') {
      flush();
      continue;
    }
    if (!cur.empty() && upper(c)) {
      char prev = cur.back();
      bool next_lower = i + 1 < name.size() && lower(name[i + 1]);
      // fooBar | HTTPRequest -> HTTP Request
      if (!upper(prev) || next_lower) flush();
    }
    cur.push_back(c);
  }
  flush();
  return words;
}

namespace {

bool is_regex_entry(const std::string& e) {
  return e.size() >= 2 && e.front() == '/' && e.back() == '/';
}

}  // namespace

WordMatcher::WordMatcher(const PatternList& list) {
  for (const auto& e : list.entries) {
    if (is_regex_entry(e)) {
      regexes_.emplace_back(e.substr(1, e.size() - 2), std::regex::icase | std::regex::ECMAScript);
    } else {
      words_.push_back(to_lower(e));
    }
  }
}

bool WordMatcher::matches(std::string_view word) const {
  std::string w = to_lower(word);
  if (std::find(words_.begin(), words_.end(), w) != words_.end()) return true;
  return std::any_of(regexes_.begin(), regexes_.end(),
                     [&](const std::regex& re) { return std::regex_match(w, re); });
}

PathMatcher::PathMatcher(const PatternList& list) {
  for (const auto& e : list.entries) {
    if (e.size() > 2 && e.compare(e.size() - 2, 2, ".*") == 0) {
      entries_.push_back({e.substr(0, e.size() - 2), true});
    } else {
      entries_.push_back({e, false});
    }
  }
}

bool PathMatcher::matches(std::string_view path) const {
  for (const auto& e : entries_) {
    if (e.subtree) {
      if (path.size() > e.path.size() + 1 && path.substr(0, e.path.size()) == e.path &&
          path[e.path.size()] == '.')
        return true;
    } else if (path == e.path) {
      return true;
    }
  }
  return false;
}

bool PathMatcher::matches_suffix(std::string_view path) const {
  for (const auto& e : entries_) {
    if (e.subtree) continue;
    if (path.size() < e.path.size()) continue;
    size_t at = path.size() - e.path.size();
    if (path.substr(at) != e.path) continue;
    if (at == 0 || path[at - 1] == '.') return true;
  }
  return false;
}

CompiledPatterns::CompiledPatterns(const AnalyzerConfig& cfg)
    : sensitive_names(cfg.list("sensitive_names")),
      sensitive_allowlist(cfg.list("sensitive_name_allowlist")),
      placeholders(cfg.list("secret_placeholders").entries),
      weak_algorithms(cfg.list("weak_algorithms")),
      crypto_sinks(cfg.list("crypto_sinks")),
      debug_calls(cfg.list("debug_calls")),
      dom_construction_calls(cfg.list("dom_construction_calls")),
      sanitizer_words(cfg.list("sanitizers")),
      sanitizer_paths(cfg.list("sanitizers")),
      taint_sources(cfg.list("taint_sources")),
      fs_sinks(cfg.list("fs_sinks")),
      upload_fields(cfg.list("upload_fields")),
      logger_paths(cfg.list("logger_paths")),
      response_sinks(cfg.list("response_sinks")) {}

bool CompiledPatterns::is_sensitive_name(std::string_view name) const {
  if (name.empty() || sensitive_allowlist.matches(name)) return false;
  auto words = split_identifier(name);
  for (size_t i = 0; i < words.size(); ++i) {
    std::string run;
    for (size_t j = i; j < words.size(); ++j) run += words[j];
    if (sensitive_names.matches(run)) return true;
  }
  return false;
}

bool CompiledPatterns::is_weak_algorithm(std::string_view value) const {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : value) {
    if (c == '-' || c == '_' || c == ' ' || c == '/') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::string run;
    for (size_t j = i; j < tokens.size(); ++j) {
      run += tokens[j];
      if (weak_algorithms.matches(run)) return true;
    }
  }
  return false;
}

bool CompiledPatterns::is_sanitizer(std::string_view callee_path) const {
  if (callee_path.empty()) return false;
  if (sanitizer_paths.matches(callee_path)) return true;
  auto dot = callee_path.rfind('.');
  std::string_view last = dot == std::string_view::npos ? callee_path : callee_path.substr(dot + 1);
  return sanitizer_words.matches(last);
}

bool CompiledPatterns::is_placeholder(std::string_view value) const {
  std::string v = to_lower(value);
  return std::any_of(placeholders.begin(), placeholders.end(),
                     [&](const std::string& p) { return to_lower(p) == v; });
}

}  // namespace jssec
