#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jssec/finding.hpp"

namespace jssec {

enum class Tier : uint8_t { Both, Client, Server };

std::string_view to_string(Tier t);

/// One row of the rule mapping table. `name`, `cwe_text` and `owasp` are the
/// Table 1 cells verbatim.
struct RuleInfo {
  std::string id;
  int smell = 0;
  std::string name;
  std::string cwe_text;
  std::vector<std::string> cwe_ids;
  std::string owasp;
  Severity severity = Severity::Warning;
  Tier tier = Tier::Both;
  std::string short_description;
  std::string hint;
  std::string explanation;
};

/// All 24 rules, ordered by id.
const std::vector<RuleInfo>& rule_table();

const RuleInfo* find_rule(std::string_view id);

/// "JSSEC-009" for 9.
std::string rule_id_for(int smell);

/// `--list-rules` text: one tab-separated line per rule.
std::string render_rule_list();

/// `--explain` text for one rule.
std::string render_explanation(const RuleInfo& rule);

}  // namespace jssec
