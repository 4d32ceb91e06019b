#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "jssec/ast.hpp"
#include "jssec/scope.hpp"
#include "jssec/source.hpp"

namespace jssec {

struct FunctionMetrics {
  const Node* node = nullptr;
  std::string name;  // "<anonymous>" when none can be inferred
  uint32_t logical_loc = 0;
  uint32_t parameter_count = 0;
  /// Deepest callback nesting below this function, counted from it.
  uint32_t callback_nesting_depth = 0;
};

/// A function passed as a call argument, with its absolute nesting depth.
struct CallbackInfo {
  const Node* fn = nullptr;
  const Node* call = nullptr;
  uint32_t depth = 1;
  /// Callback one level up (enclosing callback or previous promise link), or -1.
  int parent = -1;
};

enum class ObjectKind : uint8_t { Literal, Constructor, Class };

std::string_view to_string(ObjectKind kind);

struct ObjectMetrics {
  const Node* node = nullptr;
  ObjectKind kind = ObjectKind::Literal;
  std::string name;
  uint32_t member_count = 0;
};

/// Lines of [start, end) holding at least one token (comments and blank lines
/// do not count).
uint32_t logical_loc(const SyntaxTree& tree, const std::vector<uint32_t>& line_offsets,
                     uint32_t start, uint32_t end);

uint32_t unit_logical_loc(const SyntaxTree& tree, const std::vector<uint32_t>& line_offsets);

std::string function_name(const Node* fn);

std::vector<CallbackInfo> find_callbacks(const SyntaxTree& tree);

std::vector<FunctionMetrics> measure_functions(const SyntaxTree& tree, const ScopeTable& scopes,
                                               const std::vector<uint32_t>& line_offsets);

std::vector<ObjectMetrics> measure_objects(const SyntaxTree& tree, const ScopeTable& scopes);

// ---- prototype graph ----

/// One static inheritance link found in a unit. Keys are binding names for
/// globals and "<unit>::<name>@<offset>" for unit-local bindings.
struct ProtoEdge {
  std::string child;
  std::string parent;
  std::string child_name;
  std::string parent_name;
  /// Parent was an unresolved name (may be declared by another unit).
  bool parent_unresolved = false;
  const Node* site = nullptr;
};

struct UnitProtoInfo {
  std::vector<ProtoEdge> edges;
  /// Parent expressions that could not be resolved to a binding (computed etc.).
  std::vector<const Node*> unknown_parents;
};

UnitProtoInfo collect_prototype_edges(const SyntaxTree& tree, const ScopeTable& scopes,
                                      const std::string& unit_id);

struct GraphNodeSite {
  std::string unit_id;
  std::string name;
  const Node* site = nullptr;
};

class PrototypeGraph {
 public:
  /// Merges per-unit edges. `declared_globals` are names declared at top level
  /// of some script unit; unresolved parents outside that set are dropped.
  void add_unit(const std::string& unit_id, const UnitProtoInfo& info,
                const std::set<std::string>& declared_globals);

  /// Longest acyclic inheritance path starting at key.
  uint32_t chain_length(const std::string& key) const;

  const std::map<std::string, std::set<std::string>>& edges() const { return edges_; }
  const std::map<std::string, GraphNodeSite>& sites() const { return sites_; }

  /// Each cycle as the sorted list of its member keys.
  std::vector<std::vector<std::string>> cycles() const;

  size_t unknown_parent_count() const { return unknown_parents_; }

 private:
  uint32_t longest(const std::string& key, std::set<std::string>& on_path) const;

  std::map<std::string, std::set<std::string>> edges_;
  std::map<std::string, GraphNodeSite> sites_;
  size_t unknown_parents_ = 0;
};

}  // namespace jssec
