#include "jssec/scope.hpp"

#include <algorithm>
#include <set>

namespace jssec {

std::string_view to_string(ScopeKind kind) {
  switch (kind) {
    case ScopeKind::Global: return "global";
    case ScopeKind::Module: return "module";
    case ScopeKind::Function: return "function";
    case ScopeKind::Block: return "block";
    case ScopeKind::Catch: return "catch";
    case ScopeKind::Class: return "class";
  }
  return "block";
}

std::string_view to_string(BindingKind kind) {
  switch (kind) {
    case BindingKind::Var: return "var";
    case BindingKind::Let: return "let";
    case BindingKind::Const: return "const";
    case BindingKind::Function: return "function";
    case BindingKind::Class: return "class";
    case BindingKind::Param: return "param";
    case BindingKind::CatchParam: return "catch-param";
    case BindingKind::Import: return "import";
    case BindingKind::ImplicitGlobal: return "implicit-global";
  }
  return "var";
}

class ScopeBuilder {
 public:
  explicit ScopeBuilder(ScopeTable& t) : t_(t) {}

  void build(const SyntaxTree& tree) {
    t_.is_module_ = tree.is_module();
    const Node* root = tree.root();
    int global = new_scope(tree.is_module() ? ScopeKind::Module : ScopeKind::Global, -1, root);
    for (const Node* k : root->kids) visit(k, global);
    resolve();
  }

 private:
  int new_scope(ScopeKind kind, int parent, const Node* node) {
    Scope s;
    s.kind = kind;
    s.parent = parent;
    s.node = node;
    t_.scopes_.push_back(std::move(s));
    int id = static_cast<int>(t_.scopes_.size() - 1);
    if (node != nullptr) t_.node_scope_.emplace(node, id);
    return id;
  }

  int var_scope(int scope) const {
    while (scope >= 0) {
      ScopeKind k = t_.scopes_[scope].kind;
      if (k == ScopeKind::Function || k == ScopeKind::Global || k == ScopeKind::Module) return scope;
      scope = t_.scopes_[scope].parent;
    }
    return 0;
  }

  void declare(const Node* id, int scope, BindingKind kind) {
    auto& names = t_.scopes_[scope].names;
    auto it = names.find(id->value);
    int index;
    if (it != names.end()) {
      index = it->second;
    } else {
      Binding b;
      b.name = id->value;
      b.kind = kind;
      b.scope = scope;
      b.decl = id;
      t_.bindings_.push_back(std::move(b));
      index = static_cast<int>(t_.bindings_.size() - 1);
      names.emplace(id->value, index);
    }
    t_.decl_index_.emplace(id, index);
  }

  void add_ref(const Node* id, int scope, bool read, bool write) {
    Reference r;
    r.id = id;
    r.scope = scope;
    r.read = read;
    r.write = write;
    r.unreliable = with_depth_ > 0;
    t_.references_.push_back(r);
    t_.ref_index_.emplace(id, static_cast<int>(t_.references_.size() - 1));
  }

  /// Declares the binding identifiers of a pattern; default values and
  /// computed keys are visited as expressions in expr_scope.
  void declare_pattern(const Node* p, int scope, BindingKind kind, int expr_scope) {
    switch (p->kind) {
      case NodeKind::Identifier:
        declare(p, scope, kind);
        break;
      case NodeKind::ObjectPattern:
        for (const Node* prop : p->kids) {
          if (prop->kind == NodeKind::RestElement) {
            declare_pattern(prop->kids[0], scope, kind, expr_scope);
            continue;
          }
          if (prop->has(flag::Computed)) visit(prop->kids[0], expr_scope);
          declare_pattern(prop->kids.back(), scope, kind, expr_scope);
        }
        break;
      case NodeKind::ArrayPattern:
        for (const Node* el : p->kids) declare_pattern(el, scope, kind, expr_scope);
        break;
      case NodeKind::AssignmentPattern:
        declare_pattern(p->kids[0], scope, kind, expr_scope);
        visit(p->kids[1], expr_scope);
        break;
      case NodeKind::RestElement:
        declare_pattern(p->kids[0], scope, kind, expr_scope);
        break;
      default:
        visit(p, expr_scope);
        break;
    }
  }

  void assign_target(const Node* p, int scope, bool also_read) {
    switch (p->kind) {
      case NodeKind::Identifier:
        add_ref(p, scope, also_read, true);
        break;
      case NodeKind::ObjectPattern:
        for (const Node* prop : p->kids) {
          if (prop->kind == NodeKind::RestElement) {
            assign_target(prop->kids[0], scope, false);
            continue;
          }
          if (prop->has(flag::Computed)) visit(prop->kids[0], scope);
          assign_target(prop->kids.back(), scope, false);
        }
        break;
      case NodeKind::ArrayPattern:
        for (const Node* el : p->kids) assign_target(el, scope, false);
        break;
      case NodeKind::AssignmentPattern:
        assign_target(p->kids[0], scope, false);
        visit(p->kids[1], scope);
        break;
      case NodeKind::RestElement:
        assign_target(p->kids[0], scope, false);
        break;
      default:
        visit(p, scope);
        break;
    }
  }

  void visit_function(const Node* fn, int scope) {
    int fs = new_scope(ScopeKind::Function, scope, fn);
    const Node* id = function_id(fn);
    if (id != nullptr) {
      if (fn->kind == NodeKind::FunctionDeclaration) {
        declare(id, scope, BindingKind::Function);
      } else {
        declare(id, fs, BindingKind::Function);
      }
    }
    for (const Node* p : function_params(fn)) declare_pattern(p, fs, BindingKind::Param, fs);
    const Node* body = function_body(fn);
    if (fn->has(flag::ExpressionBody)) {
      visit(body, fs);
    } else {
      t_.node_scope_.emplace(body, fs);
      for (const Node* s : body->kids) visit(s, fs);
    }
  }

  void visit_class(const Node* cls, int scope) {
    size_t i = 0;
    const Node* id = cls->has(flag::HasId) ? cls->kids[i++] : nullptr;
    if (id != nullptr && cls->kind == NodeKind::ClassDeclaration) declare(id, scope, BindingKind::Class);
    if (cls->has(flag::HasSuper)) visit(cls->kids[i++], scope);
    int cs = new_scope(ScopeKind::Class, scope, cls);
    if (id != nullptr && cls->kind == NodeKind::ClassExpression) declare(id, cs, BindingKind::Class);
    const Node* body = cls->kids.back();
    for (const Node* m : body->kids) {
      if (m->kind == NodeKind::StaticBlock) {
        int ss = new_scope(ScopeKind::Function, cs, m);
        for (const Node* s : m->kids) visit(s, ss);
        continue;
      }
      if (m->has(flag::Computed)) visit(m->kids[0], cs);
      if (m->kids.size() > 1) visit(m->kids[1], cs);
    }
  }

  void visit_block_like(const Node* n, int scope) {
    int bs = new_scope(ScopeKind::Block, scope, n);
    for (const Node* k : n->kids) visit(k, bs);
  }

  void visit_declaration(const Node* decl, int scope) {
    BindingKind kind = decl->value == "var"   ? BindingKind::Var
                       : decl->value == "let" ? BindingKind::Let
                                              : BindingKind::Const;
    int target = kind == BindingKind::Var ? var_scope(scope) : scope;
    for (const Node* d : decl->kids) {
      declare_pattern(d->kids[0], target, kind, scope);
      if (d->has(flag::HasInit)) visit(d->kids[1], scope);
    }
  }

  void visit(const Node* n, int scope) {
    switch (n->kind) {
      case NodeKind::Identifier:
        add_ref(n, scope, true, false);
        return;
      case NodeKind::FunctionDeclaration:
      case NodeKind::FunctionExpression:
      case NodeKind::ArrowFunction:
        visit_function(n, scope);
        return;
      case NodeKind::ClassDeclaration:
      case NodeKind::ClassExpression:
        visit_class(n, scope);
        return;
      case NodeKind::VariableDeclaration:
        visit_declaration(n, scope);
        return;
      case NodeKind::BlockStatement:
        visit_block_like(n, scope);
        return;
      case NodeKind::SwitchStatement: {
        visit(n->kids[0], scope);
        int bs = new_scope(ScopeKind::Block, scope, n);
        for (size_t i = 1; i < n->kids.size(); ++i) visit(n->kids[i], bs);
        return;
      }
      case NodeKind::ForStatement: {
        int bs = new_scope(ScopeKind::Block, scope, n);
        for (const Node* k : n->kids) visit(k, bs);
        return;
      }
      case NodeKind::ForInStatement:
      case NodeKind::ForOfStatement: {
        int bs = new_scope(ScopeKind::Block, scope, n);
        const Node* left = n->kids[0];
        if (left->kind == NodeKind::VariableDeclaration) {
          visit_declaration(left, bs);
        } else {
          assign_target(left, bs, false);
        }
        visit(n->kids[1], bs);
        visit(n->kids[2], bs);
        return;
      }
      case NodeKind::CatchClause: {
        int cs = new_scope(ScopeKind::Catch, scope, n);
        if (n->has(flag::HasParam)) declare_pattern(n->kids[0], cs, BindingKind::CatchParam, cs);
        visit(n->kids.back(), cs);
        return;
      }
      case NodeKind::WithStatement:
        visit(n->kids[0], scope);
        ++with_depth_;
        visit(n->kids[1], scope);
        --with_depth_;
        return;
      case NodeKind::LabeledStatement:
        visit(n->kids[1], scope);
        return;
      case NodeKind::BreakStatement:
      case NodeKind::ContinueStatement:
        return;
      case NodeKind::ImportDeclaration:
        for (const Node* spec : n->kids) {
          if (spec->kind == NodeKind::StringLiteral) continue;
          const Node* local = spec->kids.back();
          if (local->kind == NodeKind::Identifier) declare(local, scope, BindingKind::Import);
        }
        return;
      case NodeKind::ExportNamedDeclaration: {
        bool reexport = !n->kids.empty() && n->kids.back()->kind == NodeKind::StringLiteral;
        for (const Node* k : n->kids) {
          if (k->kind == NodeKind::ExportSpecifier) {
            if (!reexport && k->kids[0]->kind == NodeKind::Identifier) add_ref(k->kids[0], scope, true, false);
          } else if (k->kind != NodeKind::StringLiteral) {
            visit(k, scope);
          }
        }
        return;
      }
      case NodeKind::ExportAllDeclaration:
        return;
      case NodeKind::AssignmentExpression:
        assign_target(n->kids[0], scope, n->value != "=");
        visit(n->kids[1], scope);
        return;
      case NodeKind::UpdateExpression:
        assign_target(n->kids[0], scope, true);
        return;
      case NodeKind::MemberExpression:
        visit(n->kids[0], scope);
        if (n->has(flag::Computed)) visit(n->kids[1], scope);
        return;
      case NodeKind::Property:
        if (n->has(flag::Shorthand)) {
          visit(n->kids[0], scope);
          return;
        }
        if (n->has(flag::Computed)) visit(n->kids[0], scope);
        visit(n->kids.back(), scope);
        return;
      case NodeKind::ObjectPattern:
      case NodeKind::ArrayPattern:
      case NodeKind::AssignmentPattern:
        // only reachable through a cover grammar position we did not anticipate
        assign_target(n, scope, false);
        return;
      default:
        for (const Node* k : n->kids) visit(k, scope);
        return;
    }
  }

  const Binding* lookup(int scope, const std::string& name, int* index) const {
    while (scope >= 0) {
      const auto& names = t_.scopes_[scope].names;
      auto it = names.find(name);
      if (it != names.end()) {
        *index = it->second;
        return &t_.bindings_[it->second];
      }
      scope = t_.scopes_[scope].parent;
    }
    return nullptr;
  }

  void bind(int ref_index, int binding) {
    Reference& r = t_.references_[ref_index];
    r.binding = binding;
    Binding& b = t_.bindings_[binding];
    if (r.read) ++b.reads;
    if (r.write) ++b.writes;
    b.refs.push_back(ref_index);
  }

  void resolve() {
    std::vector<int> pending;
    for (int i = 0; i < static_cast<int>(t_.references_.size()); ++i) {
      Reference& r = t_.references_[i];
      int index = -1;
      if (lookup(r.scope, r.id->value, &index) != nullptr) {
        bind(i, index);
      } else if (r.write && !r.unreliable) {
        auto& globals = t_.scopes_[0].names;
        auto it = globals.find(r.id->value);
        if (it == globals.end()) {
          Binding b;
          b.name = r.id->value;
          b.kind = BindingKind::ImplicitGlobal;
          b.scope = 0;
          t_.bindings_.push_back(std::move(b));
          index = static_cast<int>(t_.bindings_.size() - 1);
          globals.emplace(r.id->value, index);
          t_.implicit_globals_.push_back(index);
        } else {
          index = it->second;
        }
        bind(i, index);
      } else {
        pending.push_back(i);
      }
    }
    // reads that precede the first implicit write still resolve to it
    for (int i : pending) {
      auto& globals = t_.scopes_[0].names;
      auto it = globals.find(t_.references_[i].id->value);
      if (it != globals.end() && t_.bindings_[it->second].kind == BindingKind::ImplicitGlobal) {
        bind(i, it->second);
      }
    }
    for (Binding& b : t_.bindings_) std::sort(b.refs.begin(), b.refs.end());
  }

  ScopeTable& t_;
  int with_depth_ = 0;
};

const Binding* ScopeTable::binding_of(const Node* identifier) const {
  int i = binding_index(identifier);
  return i < 0 ? nullptr : &bindings_[i];
}

int ScopeTable::binding_index(const Node* identifier) const {
  if (auto it = decl_index_.find(identifier); it != decl_index_.end()) return it->second;
  if (auto it = ref_index_.find(identifier); it != ref_index_.end()) return references_[it->second].binding;
  return -1;
}

const Reference* ScopeTable::reference_of(const Node* identifier) const {
  auto it = ref_index_.find(identifier);
  return it == ref_index_.end() ? nullptr : &references_[it->second];
}

int ScopeTable::scope_of_node(const Node* n) const {
  auto it = node_scope_.find(n);
  return it == node_scope_.end() ? -1 : it->second;
}

int ScopeTable::enclosing_scope(const Node* n) const {
  for (const Node* p = n->parent; p != nullptr; p = p->parent) {
    if (auto it = node_scope_.find(p); it != node_scope_.end()) return it->second;
  }
  return 0;
}

uint32_t ScopeTable::global_count() const {
  uint32_t count = static_cast<uint32_t>(implicit_globals_.size());
  if (is_module_ || scopes_.empty()) return count;
  for (const auto& [name, index] : scopes_[0].names) {
    BindingKind k = bindings_[index].kind;
    if (k != BindingKind::ImplicitGlobal && k != BindingKind::Import) ++count;
  }
  return count;
}

std::vector<std::string> ScopeTable::global_names() const {
  std::vector<std::string> names;
  if (scopes_.empty()) return names;
  for (const auto& [name, index] : scopes_[0].names) {
    BindingKind k = bindings_[index].kind;
    if (k == BindingKind::ImplicitGlobal || (!is_module_ && k != BindingKind::Import)) {
      names.push_back(name);
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<std::string> ScopeTable::unresolved_names() const {
  std::set<std::string> names;
  for (const Reference& r : references_) {
    if (r.binding < 0) names.insert(r.id->value);
  }
  return {names.begin(), names.end()};
}

ScopeTable build_scope_table(const SyntaxTree& tree) {
  ScopeTable table;
  ScopeBuilder builder(table);
  builder.build(tree);
  return table;
}

}  // namespace jssec
