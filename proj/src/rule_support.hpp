#pragma once

#include <string>
#include <vector>

#include "jssec/mapping.hpp"
#include "jssec/rules.hpp"
#include "jssec/taint.hpp"

namespace jssec::detail {

/// Builds findings for one rule on one unit.
class Emitter {
 public:
  Emitter(const UnitAnalysis& ua, const RunContext& ctx, const char* rule_id, std::vector<Finding>& out);

  Finding& emit(const Node* n, std::string message, std::string sub_code = {});
  Finding& emit_range(uint32_t start, uint32_t end, std::string message, std::string sub_code = {});

  /// Appends the chain plus a final sink step.
  void attach_chain(Finding& f, const TaintChain& chain, const Node* sink, const std::string& sink_label) const;

  Span span(const Node* n) const;
  std::string line_ref(const Node* n) const;

 private:
  const UnitAnalysis& ua_;
  const RunContext& ctx_;
  const RuleInfo& rule_;
  std::vector<Finding>& out_;
};

/// Flattened operands of a `+` chain or template literal, left to right.
std::vector<const Node*> concat_parts(const Node* e);

/// Literal text of a concat part, when it is a string/template chunk.
bool literal_text(const Node* part, std::string& out);

/// Leading constant text of an expression ("/a/" for "/a/" + x).
std::string constant_prefix(const Node* e);

/// Member segments of a chain; dynamic links become "?".
std::vector<std::string> member_segments(const Node* n);

/// Identifier names referenced in expression e (member properties excluded).
std::vector<std::string> referenced_names(const Node* e);

/// True when an if/conditional guarding `at` (or an earlier early-exit `if`)
/// inside the same function tests one of `names`.
bool guarded_by(const Node* at, const std::vector<std::string>& names);

/// The function node a binding's identifier refers to when it names a function
/// declared in the unit (declaration or `var f = function...`).
const Node* resolve_function(const Node* id, const ScopeTable& scopes);

/// The initializer of the declaration an identifier resolves to, when the
/// binding is never reassigned.
const Node* const_initializer(const Node* id, const ScopeTable& scopes);

/// Callee path, falling back to the last segment when the chain is dynamic.
std::string call_path(const Node* call);

bool callee_is(const Node* call, std::initializer_list<const char*> paths);

}  // namespace jssec::detail
