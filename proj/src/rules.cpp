#include "jssec/rules.hpp"

namespace jssec {

namespace detail {
void check_large_object(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_long_function(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_long_parameter_list(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_empty_catch(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_dead_code(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_nested_callback(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_excessive_globals(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_hardcoded_secrets(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_dynamic_code_execution(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_missing_default(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_coupling(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_cross_origin(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_active_debugging(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_insecure_dom(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_unvalidated_redirect(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_json_injection(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_unprotected_cookies(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_long_prototype_chain(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_prototype_pollution(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_weak_crypto(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_insecure_http(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_logging_sensitive(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_insecure_file_handling(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
void check_error_disclosure(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);
}  // namespace detail

const std::vector<RuleEntry>& rule_registry() {
  using namespace detail;
  static const std::vector<RuleEntry> registry = {
      {"JSSEC-001", check_large_object},
      {"JSSEC-002", check_long_function},
      {"JSSEC-003", check_long_parameter_list},
      {"JSSEC-004", check_empty_catch},
      {"JSSEC-005", check_dead_code},
      {"JSSEC-006", check_nested_callback},
      {"JSSEC-007", check_excessive_globals},
      {"JSSEC-008", check_hardcoded_secrets},
      {"JSSEC-009", check_dynamic_code_execution},
      {"JSSEC-010", check_missing_default},
      {"JSSEC-011", check_coupling, true},
      {"JSSEC-012", check_cross_origin},
      {"JSSEC-013", check_active_debugging},
      {"JSSEC-014", check_insecure_dom},
      {"JSSEC-015", check_unvalidated_redirect},
      {"JSSEC-016", check_json_injection},
      {"JSSEC-017", check_unprotected_cookies},
      {"JSSEC-018", check_long_prototype_chain},
      {"JSSEC-019", check_prototype_pollution},
      {"JSSEC-020", check_weak_crypto},
      {"JSSEC-021", check_insecure_http},
      {"JSSEC-022", check_logging_sensitive},
      {"JSSEC-023", check_insecure_file_handling},
      {"JSSEC-024", check_error_disclosure},
  };
  return registry;
}

}  // namespace jssec
