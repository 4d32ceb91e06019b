#include "jssec/finding.hpp"

#include <tuple>

namespace jssec {

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "warning";
}

std::optional<Severity> parse_severity(std::string_view s) {
  if (s == "info" || s == "note") return Severity::Info;
  if (s == "warning") return Severity::Warning;
  if (s == "error") return Severity::Error;
  return std::nullopt;
}

bool finding_less(const Finding& a, const Finding& b) {
  return std::tie(a.path, a.unit_ordinal, a.span.start_byte, a.rule_id, a.span.end_byte, a.sub_code,
                  a.message) < std::tie(b.path, b.unit_ordinal, b.span.start_byte, b.rule_id,
                                        b.span.end_byte, b.sub_code, b.message);
}

bool same_rule_and_span(const Finding& a, const Finding& b) {
  return a.rule_id == b.rule_id && a.span == b.span;
}

}  // namespace jssec
