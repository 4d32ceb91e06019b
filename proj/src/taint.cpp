#include "jssec/taint.hpp"

#include <algorithm>

namespace jssec {

namespace {

constexpr int kMaxDepth = 48;

void pattern_identifiers(const Node* target, const ScopeTable& scopes, std::vector<const Node*>& out) {
  walk(target, [&](const Node* n) {
    if (n->kind == NodeKind::Identifier && scopes.binding_index(n) >= 0) {
      const Node* p = n->parent;
      // skip non-shorthand property keys: {key: binding}
      if (p != nullptr && p->kind == NodeKind::Property && !p->has(flag::Shorthand) &&
          p->kids.size() == 2 && p->kids[0] == n)
        return false;
      // skip default values: (a = b)
      if (p != nullptr && p->kind == NodeKind::AssignmentPattern && p->kids.size() == 2 && p->kids[1] == n)
        return false;
      out.push_back(n);
      return false;
    }
    if (n->kind == NodeKind::AssignmentPattern && n->kids.size() == 2) {
      pattern_identifiers(n->kids[0], scopes, out);
      return false;
    }
    return !is_function(n);
  });
}

std::string describe(const Node* n) {
  std::string p = member_path(n);
  if (!p.empty()) return p;
  if (n->kind == NodeKind::CallExpression) {
    std::string c = callee_path(n);
    return c.empty() ? "call" : c + "()";
  }
  return std::string(to_string(n->kind));
}

}  // namespace

TaintAnalyzer::TaintAnalyzer(const ScopeTable& scopes, TaintPolicy policy)
    : scopes_(scopes), policy_(std::move(policy)) {
  if (!policy_.sanitizer) policy_.sanitizer = [](const Node*) { return false; };
  if (!policy_.member_propagates) policy_.member_propagates = [](const Node*) { return true; };
}

const TaintAnalyzer::FunctionAssigns& TaintAnalyzer::assigns_for(const Node* fn) {
  auto it = assigns_.find(fn);
  if (it != assigns_.end()) return it->second;
  FunctionAssigns& fa = assigns_[fn];
  auto add_targets = [&](const Node* target, const Assign& base) {
    std::vector<const Node*> ids;
    if (target->kind == NodeKind::Identifier) {
      ids.push_back(target);
    } else {
      pattern_identifiers(target, scopes_, ids);
    }
    for (const Node* id : ids) {
      int b = scopes_.binding_index(id);
      if (b >= 0) fa[b].push_back(base);
    }
  };
  walk_own_body(fn, [&](const Node* n) {
    switch (n->kind) {
      case NodeKind::VariableDeclarator:
        if (n->has(flag::HasInit) && n->kids.size() == 2) add_targets(n->kids[0], {n, n->kids[1], nullptr, false});
        break;
      case NodeKind::AssignmentExpression:
        if (n->kids.size() == 2) add_targets(n->kids[0], {n, n->kids[1], nullptr, n->value != "="});
        break;
      case NodeKind::ForOfStatement:
      case NodeKind::ForInStatement: {
        if (n->kids.size() < 2) break;
        const Node* left = n->kids[0];
        if (left->kind == NodeKind::VariableDeclaration && !left->kids.empty()) left = left->kids[0]->kids[0];
        add_targets(left, {left, nullptr, n->kids[1], false});
        break;
      }
      default:
        break;
    }
  });
  for (auto& [b, list] : fa) {
    std::sort(list.begin(), list.end(), [](const Assign& a, const Assign& c) { return a.site->start < c.site->start; });
  }
  return fa;
}

std::optional<TaintChain> TaintAnalyzer::taint_of(const Node* expr) {
  active_.clear();
  return eval(expr, 0);
}

std::optional<TaintChain> TaintAnalyzer::eval_binding(const Node* id, int depth) {
  int b = scopes_.binding_index(id);
  if (b < 0) return std::nullopt;
  const Binding& binding = scopes_.bindings()[b];
  if (binding.decl == nullptr) return std::nullopt;
  const Node* fn = enclosing_function(id);
  if (enclosing_function(binding.decl) != fn) return std::nullopt;
  if (std::find(active_.begin(), active_.end(), b) != active_.end()) return std::nullopt;
  const auto& fa = assigns_for(fn);
  auto it = fa.find(b);
  if (it == fa.end()) return std::nullopt;
  // latest assignment that completes before the use
  const auto& list = it->second;
  int pick = -1;
  for (int i = 0; i < static_cast<int>(list.size()); ++i) {
    if (list[i].site->end <= id->start) pick = i;
  }
  if (pick < 0) return std::nullopt;
  active_.push_back(b);
  std::optional<TaintChain> result;
  for (int i = pick; i >= 0 && !result; --i) {
    const Assign& a = list[i];
    result = eval(a.value != nullptr ? a.value : a.iterable, depth + 1);
    if (!a.compound) break;
  }
  active_.pop_back();
  if (result) result->push_back({"propagation", "assigned to " + binding.name, list[pick].site});
  return result;
}

std::optional<TaintChain> TaintAnalyzer::eval(const Node* e, int depth) {
  if (e == nullptr || depth > kMaxDepth) return std::nullopt;
  if (policy_.source) {
    if (auto label = policy_.source(e)) return TaintChain{{"source", *label, e}};
  }
  switch (e->kind) {
    case NodeKind::Identifier:
      return eval_binding(e, depth);
    case NodeKind::MemberExpression: {
      if (!policy_.member_propagates(e)) return std::nullopt;
      return eval(e->kids[0], depth + 1);
    }
    case NodeKind::CallExpression:
    case NodeKind::NewExpression: {
      if (policy_.sanitizer(e)) return std::nullopt;
      const Node* c = callee(e);
      std::optional<TaintChain> r;
      if (c->kind == NodeKind::MemberExpression) r = eval(c->kids[0], depth + 1);
      for (const Node* a : call_args(e)) {
        if (r) break;
        r = eval(a, depth + 1);
      }
      if (r) r->push_back({"propagation", "passed through " + describe(e), e});
      return r;
    }
    case NodeKind::TaggedTemplateExpression:
      if (e->kids.size() == 2) return eval(e->kids[1], depth + 1);
      return std::nullopt;
    case NodeKind::BinaryExpression:
      if (e->value != "+") return std::nullopt;
      [[fallthrough]];
    case NodeKind::LogicalExpression:
    case NodeKind::TemplateLiteral:
    case NodeKind::ArrayExpression:
    case NodeKind::ObjectExpression:
    case NodeKind::SequenceExpression:
    case NodeKind::SpreadElement:
    case NodeKind::AwaitExpression:
      for (const Node* k : e->kids) {
        if (auto r = eval(k, depth + 1)) return r;
      }
      return std::nullopt;
    case NodeKind::Property:
      if (e->has(flag::Computed) && e->kids.size() == 2) return eval(e->kids[1], depth + 1);
      return eval(e->kids.back(), depth + 1);
    case NodeKind::ConditionalExpression:
      for (size_t i = 1; i < e->kids.size(); ++i) {
        if (auto r = eval(e->kids[i], depth + 1)) return r;
      }
      return std::nullopt;
    case NodeKind::AssignmentExpression:
      return eval(e->kids[1], depth + 1);
    default:
      return std::nullopt;
  }
}

bool is_message_handler(const Node* fn) {
  const Node* p = fn->parent;
  if (p == nullptr) return false;
  if (p->kind == NodeKind::CallExpression && callee_name(p) == "addEventListener") {
    auto args = call_args(p);
    return args.size() >= 2 && args[1] == fn && string_constant(args[0]) == "message" &&
           is_string_constant(args[0]);
  }
  if (p->kind == NodeKind::AssignmentExpression && p->kids[1] == fn &&
      p->kids[0]->kind == NodeKind::MemberExpression) {
    return member_name(p->kids[0]) == "onmessage";
  }
  return false;
}

namespace {

bool form_field_object(const Node* obj, const ScopeTable& scopes) {
  static const char* kLookups[] = {"getElementById", "querySelector", "getElementsByName"};
  auto is_lookup = [](const Node* n) {
    if (n->kind == NodeKind::MemberExpression && n->has(flag::Computed)) n = n->kids[0];
    if (n->kind != NodeKind::CallExpression) return false;
    auto name = callee_name(n);
    return std::any_of(std::begin(kLookups), std::end(kLookups), [&](const char* k) { return name == k; });
  };
  if (is_lookup(obj)) return true;
  if (obj->kind == NodeKind::MemberExpression && member_name(obj) == "target") return true;
  if (obj->kind == NodeKind::Identifier) {
    for (const auto& w : split_identifier(obj->value)) {
      if (w == "input" || w == "field" || w == "textbox" || w == "textarea") return true;
    }
    const Binding* b = scopes.binding_of(obj);
    if (b != nullptr && b->decl != nullptr && b->decl->parent != nullptr &&
        b->decl->parent->kind == NodeKind::VariableDeclarator && b->decl->parent->kids.size() == 2 &&
        b->decl->parent->kids[0] == b->decl && is_lookup(b->decl->parent->kids[1]))
      return true;
  }
  return false;
}

std::function<bool(const Node*)> sanitizer_fn(const CompiledPatterns& pats) {
  return [&pats](const Node* call) {
    if (call->kind != NodeKind::CallExpression) return false;
    std::string path = callee_path(call);
    if (path.empty()) path = std::string(callee_name(call));
    return pats.is_sanitizer(path);
  };
}

}  // namespace

TaintPolicy user_input_policy(const CompiledPatterns& pats, const ScopeTable& scopes) {
  TaintPolicy p;
  p.source = [&pats, &scopes](const Node* e) -> std::optional<std::string> {
    if (e->kind != NodeKind::MemberExpression && e->kind != NodeKind::Identifier) return std::nullopt;
    std::string path = member_path(e);
    if (!path.empty() && pats.taint_sources.matches(path)) {
      const Node* root = chain_root(e);
      // a local variable that happens to be called `location`
      if (e->kind == NodeKind::Identifier && root != nullptr) {
        const Binding* b = scopes.binding_of(root);
        if (b != nullptr && b->kind != BindingKind::ImplicitGlobal) return std::nullopt;
      }
      return path;
    }
    if (e->kind != NodeKind::MemberExpression) return std::nullopt;
    std::string_view prop = member_name(e);
    const Node* obj = e->kids[0];
    if (prop == "data" && obj->kind == NodeKind::Identifier) {
      const Binding* b = scopes.binding_of(obj);
      if (b != nullptr && b->kind == BindingKind::Param && b->decl != nullptr) {
        const Node* fn = b->decl->parent;
        if (is_function(fn) && is_message_handler(fn)) return obj->value + ".data";
      }
    }
    if (prop == "value" && form_field_object(obj, scopes)) {
      return path.empty() ? std::string("form field value") : path;
    }
    return std::nullopt;
  };
  p.sanitizer = sanitizer_fn(pats);
  return p;
}

TaintPolicy path_source_policy(const CompiledPatterns& pats, std::vector<std::string> paths) {
  TaintPolicy p;
  p.source = [paths = std::move(paths)](const Node* e) -> std::optional<std::string> {
    if (e->kind != NodeKind::MemberExpression && e->kind != NodeKind::Identifier) return std::nullopt;
    std::string path = member_path(e);
    if (path.empty()) return std::nullopt;
    for (const auto& s : paths) {
      if (path == s || path == "window." + s) return path;
    }
    return std::nullopt;
  };
  p.sanitizer = sanitizer_fn(pats);
  return p;
}

TaintPolicy error_value_policy(const ScopeTable& scopes) {
  TaintPolicy p;
  p.source = [&scopes](const Node* e) -> std::optional<std::string> {
    if (e->kind == NodeKind::MemberExpression && member_name(e) == "stack") {
      std::string path = member_path(e);
      return path.empty() ? std::string("stack trace") : path;
    }
    if (e->kind != NodeKind::Identifier) return std::nullopt;
    const Binding* b = scopes.binding_of(e);
    if (b == nullptr) return std::nullopt;
    if (b->kind == BindingKind::CatchParam) return "caught error " + b->name;
    if (b->kind == BindingKind::Param && (b->name == "err" || b->name == "error")) return "error argument " + b->name;
    return std::nullopt;
  };
  p.member_propagates = [](const Node* m) {
    auto name = member_name(m);
    return name == "message" || name == "stack" || name == "trace" || name == "stackTrace";
  };
  return p;
}

}  // namespace jssec
