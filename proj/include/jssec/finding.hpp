#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jssec/source.hpp"

namespace jssec {

enum class Severity : uint8_t { Info = 0, Warning = 1, Error = 2 };

std::string_view to_string(Severity s);
std::optional<Severity> parse_severity(std::string_view s);

/// One step of a taint chain: source, propagation or sink.
struct ChainStep {
  std::string role;
  std::string label;
  Span span;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

struct Finding {
  std::string rule_id;
  std::string rule_name;
  /// Optional refinement within a rule (e.g. "implicit-global").
  std::string sub_code;
  std::string path;
  Span span;
  std::string message;
  Severity severity = Severity::Warning;
  std::vector<std::string> cwe_ids;
  std::string owasp_category;
  std::string hint;
  std::vector<ChainStep> chain;
  std::vector<std::string> notes;
  /// Set for findings moved to the suppressed list.
  std::string suppression_reason;
  /// Unit ordinal within its origin file; used for ordering only.
  uint32_t unit_ordinal = 0;
};

/// Canonical ordering: path, unit, start byte, rule id, then the rest.
bool finding_less(const Finding& a, const Finding& b);

/// Dedup key: same rule and same span.
bool same_rule_and_span(const Finding& a, const Finding& b);

}  // namespace jssec
