#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "jssec/config.hpp"
#include "jssec/engine.hpp"
#include "jssec/finding.hpp"
#include "jssec/metrics.hpp"
#include "jssec/patterns.hpp"
#include "jssec/scope.hpp"
#include "jssec/source.hpp"

namespace jssec {

/// Everything the rules need to know about one unit. `tree` and `scopes` are
/// null when the unit did not parse; only rules that declare so still run.
struct UnitAnalysis {
  const SourceUnit* unit = nullptr;
  const SyntaxTree* tree = nullptr;
  const ScopeTable* scopes = nullptr;
  std::vector<FunctionMetrics> functions;
  std::vector<ObjectMetrics> objects;
  std::vector<CallbackInfo> callbacks;
  uint32_t logical_loc = 0;
  UnitProtoInfo proto;
};

/// Facts merged across all units of a run.
struct RunContext {
  const AnalyzerConfig* cfg = nullptr;
  const CompiledPatterns* patterns = nullptr;
  PrototypeGraph graph;
  /// Names read without a declaration by some unit.
  std::set<std::string> unresolved_reads;
  /// unit id -> global names that another unit of the same page also declares.
  std::map<std::string, std::set<std::string>> global_collisions;
};

using RuleCheck = void (*)(const UnitAnalysis&, const RunContext&, std::vector<Finding>&);

struct RuleEntry {
  const char* id;
  RuleCheck check;
  /// Runs on units that failed to parse (tree and scopes are null).
  bool runs_without_tree = false;
};

/// All 24 detectors, ordered by rule id.
const std::vector<RuleEntry>& rule_registry();

/// run_analysis over an explicit rule list (settings still come from cfg).
AnalysisResult run_analysis_with_rules(const std::vector<SourceUnit>& units, const AnalyzerConfig& cfg,
                                       const std::vector<PageGroup>& pages, const std::vector<RuleEntry>& rules);

}  // namespace jssec
