#include "jssec/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace jssec {

std::string_view to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Literal: return "object-literal";
    case ObjectKind::Constructor: return "constructor-function";
    case ObjectKind::Class: return "class";
  }
  return "object-literal";
}

namespace {

uint32_t line_of(const std::vector<uint32_t>& line_offsets, uint32_t offset) {
  auto it = std::upper_bound(line_offsets.begin(), line_offsets.end(), offset);
  return static_cast<uint32_t>(it - line_offsets.begin());
}

bool is_callback_fn(const Node* n) {
  return n->kind == NodeKind::FunctionExpression || n->kind == NodeKind::ArrowFunction;
}

bool is_promise_link(const Node* call) {
  if (call->kind != NodeKind::CallExpression) return false;
  const Node* c = callee(call);
  if (c->kind != NodeKind::MemberExpression) return false;
  std::string_view name = member_name(c);
  return name == "then" || name == "catch" || name == "finally";
}

/// Name a function or class picks up from where it is defined.
std::string contextual_name(const Node* n) {
  const Node* p = n->parent;
  if (p == nullptr) return {};
  switch (p->kind) {
    case NodeKind::VariableDeclarator:
      if (p->kids.size() > 1 && p->kids[1] == n && p->kids[0]->kind == NodeKind::Identifier)
        return p->kids[0]->value;
      return {};
    case NodeKind::AssignmentExpression:
      if (p->kids[1] == n) return member_path(p->kids[0]);
      return {};
    case NodeKind::Property:
    case NodeKind::MethodDefinition:
    case NodeKind::PropertyDefinition:
      if (p->kids.back() == n) return std::string(property_key(p));
      return {};
    case NodeKind::AssignmentPattern:
      if (p->kids[1] == n && p->kids[0]->kind == NodeKind::Identifier) return p->kids[0]->value;
      return {};
    default:
      return {};
  }
}

const Node* unparen_prototype_owner(const Node* n) {
  // X.prototype -> X (identifier), otherwise null
  if (n->kind != NodeKind::MemberExpression || member_name(n) != "prototype") return nullptr;
  const Node* obj = n->kids[0];
  return obj->kind == NodeKind::Identifier ? obj : nullptr;
}

}  // namespace

uint32_t logical_loc(const SyntaxTree& tree, const std::vector<uint32_t>& line_offsets,
                     uint32_t start, uint32_t end) {
  const auto& toks = tree.tokens();
  auto it = std::lower_bound(toks.begin(), toks.end(), start,
                             [](const TokenExtent& t, uint32_t v) { return t.start < v; });
  uint32_t count = 0;
  uint32_t last_line = 0;
  for (; it != toks.end() && it->start < end; ++it) {
    if (it->end > end) break;
    uint32_t first = line_of(line_offsets, it->start);
    uint32_t last = line_of(line_offsets, it->end > it->start ? it->end - 1 : it->start);
    if (first <= last_line) first = last_line + 1;
    if (last >= first) {
      count += last - first + 1;
      last_line = last;
    }
  }
  return count;
}

uint32_t unit_logical_loc(const SyntaxTree& tree, const std::vector<uint32_t>& line_offsets) {
  return logical_loc(tree, line_offsets, 0, UINT32_MAX);
}

std::string function_name(const Node* fn) {
  if (const Node* id = function_id(fn)) return id->value;
  std::string name = contextual_name(fn);
  if (name.empty() && fn->parent != nullptr && fn->parent->kind == NodeKind::MethodDefinition) {
    name = std::string(property_key(fn->parent));
  }
  if (name.empty() && fn->parent != nullptr && fn->parent->kind == NodeKind::Property) {
    name = std::string(property_key(fn->parent));
  }
  return name.empty() ? "<anonymous>" : name;
}

std::vector<CallbackInfo> find_callbacks(const SyntaxTree& tree) {
  std::vector<CallbackInfo> cbs;
  std::unordered_map<const Node*, int> index;
  walk(tree.root(), [&](const Node* n) {
    if (n->kind == NodeKind::CallExpression || n->kind == NodeKind::NewExpression) {
      for (const Node* a : call_args(n)) {
        if (is_callback_fn(a)) {
          index.emplace(a, static_cast<int>(cbs.size()));
          cbs.push_back({a, n, 0, -1});
        }
      }
    }
    return true;
  });

  std::function<uint32_t(int)> depth_of = [&](int i) -> uint32_t {
    CallbackInfo& cb = cbs[i];
    if (cb.depth > 0) return cb.depth;
    uint32_t best = 0;
    int parent = -1;
    for (const Node* p = cb.fn->parent; p != nullptr; p = p->parent) {
      if (auto it = index.find(p); it != index.end()) {
        best = depth_of(it->second);
        parent = it->second;
        break;
      }
    }
    if (is_promise_link(cb.call)) {
      const Node* obj = callee(cb.call)->kids[0];
      while (obj->kind == NodeKind::CallExpression) {
        int link = -1;
        uint32_t link_depth = 0;
        for (const Node* a : call_args(obj)) {
          if (auto it = index.find(a); it != index.end()) {
            uint32_t d = depth_of(it->second);
            if (d > link_depth) {
              link_depth = d;
              link = it->second;
            }
          }
        }
        if (link >= 0) {
          if (link_depth > best) {
            best = link_depth;
            parent = link;
          }
          break;
        }
        if (!is_promise_link(obj)) break;
        obj = callee(obj)->kids[0];
      }
    }
    cb.depth = best + 1;
    cb.parent = parent;
    return cb.depth;
  };
  for (int i = 0; i < static_cast<int>(cbs.size()); ++i) depth_of(i);
  return cbs;
}

std::vector<FunctionMetrics> measure_functions(const SyntaxTree& tree, const ScopeTable& /*scopes*/,
                                               const std::vector<uint32_t>& line_offsets) {
  std::vector<FunctionMetrics> out;
  std::unordered_map<const Node*, size_t> fn_index;
  walk(tree.root(), [&](const Node* n) {
    if (is_function(n)) {
      FunctionMetrics m;
      m.node = n;
      m.name = function_name(n);
      m.parameter_count = n->param_count;
      const Node* body = function_body(n);
      if (n->has(flag::ExpressionBody)) {
        m.logical_loc = logical_loc(tree, line_offsets, body->start, body->end);
      } else {
        m.logical_loc = logical_loc(tree, line_offsets, body->start + 1, body->end - 1);
      }
      fn_index.emplace(n, out.size());
      out.push_back(std::move(m));
    }
    return true;
  });

  std::vector<CallbackInfo> cbs = find_callbacks(tree);
  std::unordered_map<const Node*, uint32_t> cb_depth;
  for (const auto& cb : cbs) cb_depth.emplace(cb.fn, cb.depth);
  auto base_of = [&](const Node* fn) -> uint32_t {
    for (const Node* p = fn; p != nullptr; p = p->parent) {
      if (auto it = cb_depth.find(p); it != cb_depth.end()) return it->second;
    }
    return 0;
  };
  for (const auto& cb : cbs) {
    for (const Node* p = cb.fn->parent; p != nullptr; p = p->parent) {
      auto it = fn_index.find(p);
      if (it == fn_index.end()) continue;
      uint32_t base = base_of(p);
      uint32_t rel = cb.depth > base ? cb.depth - base : 0;
      auto& m = out[it->second];
      m.callback_nesting_depth = std::max(m.callback_nesting_depth, rel);
    }
  }
  return out;
}

std::vector<ObjectMetrics> measure_objects(const SyntaxTree& tree, const ScopeTable& /*scopes*/) {
  std::vector<ObjectMetrics> out;
  const Node* root = tree.root();

  // prototype members per constructor name
  std::map<std::string, std::set<std::string>> proto_members;
  std::set<const Node*> prototype_literals;
  std::set<std::string> constructed;
  walk(root, [&](const Node* n) {
    if (n->kind == NodeKind::AssignmentExpression) {
      const Node* left = n->kids[0];
      if (const Node* owner = unparen_prototype_owner(left)) {
        if (n->kids[1]->kind == NodeKind::ObjectExpression) {
          auto& members = proto_members[owner->value];
          for (const Node* p : n->kids[1]->kids) {
            if (p->kind == NodeKind::Property) members.insert(std::string(property_key(p)));
          }
          prototype_literals.insert(n->kids[1]);
        } else {
          proto_members[owner->value];
        }
      } else if (left->kind == NodeKind::MemberExpression) {
        if (const Node* owner = unparen_prototype_owner(left->kids[0])) {
          std::string_view name = member_name(left);
          proto_members[owner->value].insert(name.empty() ? "[computed]@" + std::to_string(left->start)
                                                          : std::string(name));
        }
      }
    } else if (n->kind == NodeKind::CallExpression && callee_path(n) == "Object.assign" &&
               n->kids.size() >= 3) {
      if (const Node* owner = unparen_prototype_owner(n->kids[1])) {
        auto& members = proto_members[owner->value];
        for (size_t i = 2; i < n->kids.size(); ++i) {
          if (n->kids[i]->kind != NodeKind::ObjectExpression) continue;
          for (const Node* p : n->kids[i]->kids) {
            if (p->kind == NodeKind::Property) members.insert(std::string(property_key(p)));
          }
          prototype_literals.insert(n->kids[i]);
        }
      }
    } else if (n->kind == NodeKind::NewExpression && callee(n)->kind == NodeKind::Identifier) {
      constructed.insert(callee(n)->value);
    }
    return true;
  });

  auto this_members = [](const Node* body, std::set<std::string>& names) {
    walk(body, [&](const Node* n) {
      if (n != body && (n->kind == NodeKind::FunctionDeclaration || n->kind == NodeKind::FunctionExpression ||
                        n->kind == NodeKind::ClassBody)) {
        return false;  // arrows keep the outer `this`
      }
      if (n->kind == NodeKind::AssignmentExpression) {
        const Node* left = n->kids[0];
        if (left->kind == NodeKind::MemberExpression && left->kids[0]->kind == NodeKind::ThisExpression) {
          std::string_view name = member_name(left);
          if (!name.empty()) names.insert(std::string(name));
        }
      }
      return true;
    });
  };

  std::set<std::string> constructor_names;
  walk(root, [&](const Node* n) {
    if (n->kind == NodeKind::ObjectExpression) {
      if (prototype_literals.count(n) == 0) {
        ObjectMetrics m;
        m.node = n;
        m.kind = ObjectKind::Literal;
        m.name = contextual_name(n);
        if (m.name.empty()) m.name = "<object>";
        for (const Node* p : n->kids) {
          if (p->kind == NodeKind::Property) ++m.member_count;
        }
        out.push_back(std::move(m));
      }
    } else if (n->kind == NodeKind::FunctionDeclaration || n->kind == NodeKind::FunctionExpression) {
      std::string name = function_id(n) != nullptr ? function_id(n)->value : contextual_name(n);
      if (name.empty() || name.find('.') != std::string::npos) return true;
      if (n->parent != nullptr && (n->parent->kind == NodeKind::MethodDefinition ||
                                   (n->parent->kind == NodeKind::Property && n->parent->has(flag::Method)))) {
        return true;
      }
      std::set<std::string> members;
      this_members(function_body(n), members);
      auto pm = proto_members.find(name);
      bool capitalized = std::isupper(static_cast<unsigned char>(name[0])) != 0;
      bool is_ctor = pm != proto_members.end() || constructed.count(name) > 0 ||
                     (capitalized && !members.empty());
      if (is_ctor && constructor_names.insert(name).second) {
        if (pm != proto_members.end()) members.insert(pm->second.begin(), pm->second.end());
        ObjectMetrics m;
        m.node = n;
        m.kind = ObjectKind::Constructor;
        m.name = name;
        m.member_count = static_cast<uint32_t>(members.size());
        out.push_back(std::move(m));
      }
    } else if (is_class(n)) {
      ObjectMetrics m;
      m.node = n;
      m.kind = ObjectKind::Class;
      m.name = n->has(flag::HasId) ? n->kids[0]->value : contextual_name(n);
      if (m.name.empty()) m.name = "<class>";
      std::set<std::string> names;
      uint32_t dynamic = 0;
      for (const Node* member : n->kids.back()->kids) {
        if (member->kind == NodeKind::StaticBlock) continue;
        if (member->kind == NodeKind::MethodDefinition && member->value == "constructor") {
          this_members(function_body(member->kids[1]), names);
          continue;
        }
        std::string_view key = property_key(member);
        if (key.empty()) {
          ++dynamic;
        } else {
          std::string k(key);
          if (member->kids[0]->kind == NodeKind::PrivateName) k = "#" + k;
          if (member->has(flag::Static)) k = "static " + k;
          names.insert(k);
        }
      }
      m.member_count = static_cast<uint32_t>(names.size()) + dynamic;
      out.push_back(std::move(m));
    }
    return true;
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const ObjectMetrics& a, const ObjectMetrics& b) { return a.node->start < b.node->start; });
  return out;
}

// ---- prototype graph ----

namespace {

struct EdgeCollector {
  const ScopeTable& scopes;
  const std::string& unit_id;
  UnitProtoInfo& info;

  /// Graph key for an identifier; sets unresolved when it names no binding.
  std::string key_of(const Node* id, bool* unresolved) const {
    const Binding* b = scopes.binding_of(id);
    *unresolved = b == nullptr;
    if (b == nullptr) return id->value;
    if (b->kind == BindingKind::ImplicitGlobal || (b->scope == 0 && !scopes.is_module())) return id->value;
    uint32_t at = b->decl != nullptr ? b->decl->start : 0;
    return unit_id + "::" + b->name + "@" + std::to_string(at);
  }

  /// Y or Y.prototype -> identifier Y.
  static const Node* parent_ref(const Node* n) {
    if (n->kind == NodeKind::Identifier) return n;
    return unparen_prototype_owner(n);
  }

  void add(const Node* child, const Node* parent_expr, const Node* site) {
    const Node* parent = parent_ref(parent_expr);
    if (parent == nullptr) {
      if (parent_expr->kind != NodeKind::NullLiteral) info.unknown_parents.push_back(parent_expr);
      return;
    }
    bool child_unresolved = false;
    ProtoEdge e;
    e.child = key_of(child, &child_unresolved);
    e.parent = key_of(parent, &e.parent_unresolved);
    e.child_name = child->value;
    e.parent_name = parent->value;
    e.site = site;
    info.edges.push_back(std::move(e));
  }

  void run(const Node* root) {
    walk(root, [&](const Node* n) {
      switch (n->kind) {
        case NodeKind::ClassDeclaration:
        case NodeKind::ClassExpression: {
          if (!n->has(flag::HasSuper)) break;
          const Node* id = n->has(flag::HasId) ? n->kids[0] : nullptr;
          if (id == nullptr && n->parent != nullptr && n->parent->kind == NodeKind::VariableDeclarator &&
              n->parent->kids[0]->kind == NodeKind::Identifier) {
            id = n->parent->kids[0];
          }
          const Node* super = n->kids[n->has(flag::HasId) ? 1 : 0];
          if (id == nullptr) break;
          if (super->kind == NodeKind::Identifier) {
            add(id, super, id);
          } else {
            info.unknown_parents.push_back(super);
          }
          break;
        }
        case NodeKind::AssignmentExpression: {
          if (n->value != "=") break;
          const Node* left = n->kids[0];
          const Node* right = n->kids[1];
          const Node* owner = unparen_prototype_owner(left);
          if (owner == nullptr && left->kind == NodeKind::MemberExpression && member_name(left) == "__proto__") {
            owner = unparen_prototype_owner(left->kids[0]);
            if (owner != nullptr) add(owner, right, left);
            break;
          }
          if (owner == nullptr) break;
          if (right->kind == NodeKind::CallExpression && callee_path(right) == "Object.create" &&
              right->kids.size() >= 2) {
            add(owner, right->kids[1], left);
          } else if (right->kind == NodeKind::NewExpression && callee(right)->kind == NodeKind::Identifier) {
            add(owner, callee(right), left);
          }
          break;
        }
        case NodeKind::CallExpression: {
          if (callee_path(n) != "Object.setPrototypeOf" || n->kids.size() < 3) break;
          const Node* target = parent_ref(n->kids[1]);
          if (target != nullptr) add(target, n->kids[2], n);
          break;
        }
        case NodeKind::VariableDeclarator: {
          if (!n->has(flag::HasInit) || n->kids[0]->kind != NodeKind::Identifier) break;
          const Node* init = n->kids[1];
          if (init->kind == NodeKind::CallExpression && callee_path(init) == "Object.create" &&
              init->kids.size() >= 2) {
            add(n->kids[0], init->kids[1], n->kids[0]);
          }
          break;
        }
        default:
          break;
      }
      return true;
    });
  }
};

}  // namespace

UnitProtoInfo collect_prototype_edges(const SyntaxTree& tree, const ScopeTable& scopes,
                                      const std::string& unit_id) {
  UnitProtoInfo info;
  EdgeCollector c{scopes, unit_id, info};
  c.run(tree.root());
  return info;
}

void PrototypeGraph::add_unit(const std::string& unit_id, const UnitProtoInfo& info,
                              const std::set<std::string>& declared_globals) {
  unknown_parents_ += info.unknown_parents.size();
  for (const ProtoEdge& e : info.edges) {
    if (e.parent_unresolved && declared_globals.count(e.parent) == 0) {
      ++unknown_parents_;
      continue;
    }
    edges_[e.child].insert(e.parent);
    sites_.emplace(e.child, GraphNodeSite{unit_id, e.child_name, e.site});
  }
}

uint32_t PrototypeGraph::longest(const std::string& key, std::set<std::string>& on_path) const {
  auto it = edges_.find(key);
  if (it == edges_.end()) return 0;
  on_path.insert(key);
  uint32_t best = 0;
  for (const std::string& p : it->second) {
    if (on_path.count(p) > 0) continue;
    best = std::max(best, 1 + longest(p, on_path));
  }
  on_path.erase(key);
  return best;
}

uint32_t PrototypeGraph::chain_length(const std::string& key) const {
  std::set<std::string> on_path;
  return longest(key, on_path);
}

std::vector<std::vector<std::string>> PrototypeGraph::cycles() const {
  // Tarjan's strongly connected components
  std::map<std::string, int> index, low;
  std::set<std::string> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> out;
  int counter = 0;
  std::function<void(const std::string&)> strong = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    if (auto it = edges_.find(v); it != edges_.end()) {
      for (const std::string& w : it->second) {
        if (index.count(w) == 0) {
          strong(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w) > 0) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> comp;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        comp.push_back(w);
      } while (w != v);
      bool self_loop = comp.size() == 1 && edges_.count(v) > 0 && edges_.at(v).count(v) > 0;
      if (comp.size() > 1 || self_loop) {
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  };
  for (const auto& [v, _] : edges_) {
    if (index.count(v) == 0) strong(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jssec
