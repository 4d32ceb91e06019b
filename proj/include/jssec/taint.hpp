#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jssec/ast.hpp"
#include "jssec/patterns.hpp"
#include "jssec/scope.hpp"

namespace jssec {

struct TaintStep {
  std::string role;  // source | propagation | sink
  std::string label;
  const Node* node = nullptr;
};

using TaintChain = std::vector<TaintStep>;

struct TaintPolicy {
  /// Label for expressions that are sources, nullopt otherwise.
  std::function<std::optional<std::string>(const Node*)> source;
  /// Calls whose result is clean regardless of their inputs.
  std::function<bool(const Node* call)> sanitizer;
  /// Whether reading a property of a tainted object yields a tainted value.
  std::function<bool(const Node* member)> member_propagates;
};

/// Intraprocedural taint tracking. A variable is followed only while it is
/// declared in the same function as the use, so chains never leave one body.
class TaintAnalyzer {
 public:
  TaintAnalyzer(const ScopeTable& scopes, TaintPolicy policy);

  /// Chain from a source to expr (source first), or nullopt when expr is clean.
  std::optional<TaintChain> taint_of(const Node* expr);

 private:
  struct Assign {
    const Node* site;
    const Node* value;  // null for loop variables bound from `iterable`
    const Node* iterable;
    bool compound;
  };
  using FunctionAssigns = std::unordered_map<int, std::vector<Assign>>;

  const FunctionAssigns& assigns_for(const Node* fn);
  std::optional<TaintChain> eval(const Node* e, int depth);
  std::optional<TaintChain> eval_binding(const Node* id, int depth);

  const ScopeTable& scopes_;
  TaintPolicy policy_;
  std::unordered_map<const Node*, FunctionAssigns> assigns_;
  std::vector<int> active_;
};

/// User-controlled input: configured source paths, message-event data inside
/// message handlers, and form field values.
TaintPolicy user_input_policy(const CompiledPatterns& pats, const ScopeTable& scopes);

/// Only the given member paths are sources (e.g. just document.cookie).
TaintPolicy path_source_policy(const CompiledPatterns& pats, std::vector<std::string> paths);

/// Error objects: catch parameters, err/error callback parameters and `.stack`.
TaintPolicy error_value_policy(const ScopeTable& scopes);

/// True when fn is registered as a "message" event handler.
bool is_message_handler(const Node* fn);

}  // namespace jssec
