#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "jssec/ast.hpp"

namespace jssec {

enum class ScopeKind : uint8_t { Global, Module, Function, Block, Catch, Class };

enum class BindingKind : uint8_t {
  Var,
  Let,
  Const,
  Function,
  Class,
  Param,
  CatchParam,
  Import,
  ImplicitGlobal,
};

std::string_view to_string(ScopeKind kind);
std::string_view to_string(BindingKind kind);

struct Scope {
  ScopeKind kind;
  int parent = -1;
  const Node* node = nullptr;
  std::unordered_map<std::string, int> names;
};

struct Binding {
  std::string name;
  BindingKind kind;
  int scope = 0;
  /// Declaring identifier; null for implicit globals.
  const Node* decl = nullptr;
  uint32_t reads = 0;
  uint32_t writes = 0;
  std::vector<int> refs;
};

struct Reference {
  const Node* id = nullptr;
  int scope = 0;
  int binding = -1;  // -1: unresolved read
  bool read = false;
  bool write = false;
  /// Inside a `with` body, where resolution is a guess.
  bool unreliable = false;
};

class ScopeTable {
 public:
  const std::vector<Scope>& scopes() const { return scopes_; }
  const std::vector<Binding>& bindings() const { return bindings_; }
  const std::vector<Reference>& references() const { return references_; }
  bool is_module() const { return is_module_; }

  /// Binding declared by or referenced through this identifier node.
  const Binding* binding_of(const Node* identifier) const;
  int binding_index(const Node* identifier) const;
  const Reference* reference_of(const Node* identifier) const;

  /// Scope created by a scope-introducing node (function, block, ...).
  int scope_of_node(const Node* n) const;

  /// Innermost scope enclosing node n.
  int enclosing_scope(const Node* n) const;

  /// Top-level declarations (non-module units) plus implicit globals.
  uint32_t global_count() const;

  /// Indices of ImplicitGlobal bindings, in first-write order.
  const std::vector<int>& implicit_globals() const { return implicit_globals_; }

  /// Names declared at the top level of a script unit (shared with other scripts).
  std::vector<std::string> global_names() const;

  /// Names read but not declared anywhere in the unit.
  std::vector<std::string> unresolved_names() const;

 private:
  friend class ScopeBuilder;
  std::vector<Scope> scopes_;
  std::vector<Binding> bindings_;
  std::vector<Reference> references_;
  std::unordered_map<const Node*, int> ref_index_;
  std::unordered_map<const Node*, int> decl_index_;
  std::unordered_map<const Node*, int> node_scope_;
  std::vector<int> implicit_globals_;
  bool is_module_ = false;
};

ScopeTable build_scope_table(const SyntaxTree& tree);

}  // namespace jssec
