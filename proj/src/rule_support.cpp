#include "rule_support.hpp"

#include <algorithm>

namespace jssec::detail {

Emitter::Emitter(const UnitAnalysis& ua, const RunContext& ctx, const char* rule_id, std::vector<Finding>& out)
    : ua_(ua), ctx_(ctx), rule_(*find_rule(rule_id)), out_(out) {}

Span Emitter::span(const Node* n) const { return ua_.unit->span(n->start, n->end); }

std::string Emitter::line_ref(const Node* n) const {
  Span s = span(n);
  return "line " + std::to_string(s.start_line);
}

Finding& Emitter::emit_range(uint32_t start, uint32_t end, std::string message, std::string sub_code) {
  Finding f;
  f.rule_id = rule_.id;
  f.rule_name = rule_.name;
  f.sub_code = std::move(sub_code);
  f.path = ua_.unit->origin_path();
  f.span = ua_.unit->span(start, end);
  f.message = std::move(message);
  f.severity = rule_.severity;
  f.cwe_ids = rule_.cwe_ids;
  f.owasp_category = rule_.owasp;
  f.hint = rule_.hint;
  f.unit_ordinal = ua_.unit->ordinal();
  (void)ctx_;
  out_.push_back(std::move(f));
  return out_.back();
}

Finding& Emitter::emit(const Node* n, std::string message, std::string sub_code) {
  return emit_range(n->start, n->end, std::move(message), std::move(sub_code));
}

void Emitter::attach_chain(Finding& f, const TaintChain& chain, const Node* sink, const std::string& sink_label) const {
  for (const auto& step : chain) f.chain.push_back({step.role, step.label, span(step.node)});
  f.chain.push_back({"sink", sink_label, span(sink)});
}

namespace {

void flatten(const Node* e, std::vector<const Node*>& out) {
  if (e->kind == NodeKind::BinaryExpression && e->value == "+") {
    flatten(e->kids[0], out);
    flatten(e->kids[1], out);
  } else if (e->kind == NodeKind::TemplateLiteral) {
    for (const Node* k : e->kids) out.push_back(k);
  } else {
    out.push_back(e);
  }
}

}  // namespace

std::vector<const Node*> concat_parts(const Node* e) {
  std::vector<const Node*> out;
  flatten(e, out);
  return out;
}

bool literal_text(const Node* part, std::string& out) {
  if (part->kind == NodeKind::StringLiteral || part->kind == NodeKind::TemplateElement) {
    out = part->value;
    return true;
  }
  return false;
}

std::string constant_prefix(const Node* e) {
  std::string prefix;
  for (const Node* p : concat_parts(e)) {
    std::string t;
    if (!literal_text(p, t)) break;
    prefix += t;
  }
  return prefix;
}

std::vector<std::string> member_segments(const Node* n) {
  std::vector<std::string> segs;
  while (n->kind == NodeKind::MemberExpression) {
    std::string_view name = member_name(n);
    segs.push_back(name.empty() ? std::string("?") : std::string(name));
    n = n->kids[0];
  }
  if (n->kind == NodeKind::Identifier) segs.push_back(n->value);
  else if (n->kind == NodeKind::ThisExpression) segs.push_back("this");
  else segs.push_back("?");
  std::reverse(segs.begin(), segs.end());
  return segs;
}

std::vector<std::string> referenced_names(const Node* e) {
  std::vector<std::string> names;
  walk(e, [&](const Node* n) {
    if (n->kind == NodeKind::Identifier) {
      const Node* p = n->parent;
      bool is_prop = p != nullptr && p->kind == NodeKind::MemberExpression && !p->has(flag::Computed) &&
                     p->kids.size() == 2 && p->kids[1] == n;
      if (!is_prop && std::find(names.begin(), names.end(), n->value) == names.end()) names.push_back(n->value);
    }
    return !is_function(n);
  });
  return names;
}

namespace {

bool mentions(const Node* test, const std::vector<std::string>& names) {
  for (const auto& n : referenced_names(test)) {
    if (std::find(names.begin(), names.end(), n) != names.end()) return true;
  }
  return false;
}

bool exits(const Node* stmt) {
  if (stmt == nullptr) return false;
  if (stmt->kind == NodeKind::ReturnStatement || stmt->kind == NodeKind::ThrowStatement) return true;
  if (stmt->kind == NodeKind::BlockStatement) {
    return std::any_of(stmt->kids.begin(), stmt->kids.end(), exits);
  }
  return false;
}

}  // namespace

bool guarded_by(const Node* at, const std::vector<std::string>& names) {
  if (names.empty()) return false;
  const Node* child = at;
  for (const Node* p = at->parent; p != nullptr && !is_function(p); child = p, p = p->parent) {
    if ((p->kind == NodeKind::IfStatement || p->kind == NodeKind::ConditionalExpression) &&
        p->kids[0] != child && mentions(p->kids[0], names))
      return true;
    if (p->kind == NodeKind::LogicalExpression && p->kids.size() == 2 && p->kids[1] == child &&
        mentions(p->kids[0], names))
      return true;
    if (p->kind == NodeKind::BlockStatement || p->kind == NodeKind::Program || p->kind == NodeKind::SwitchCase) {
      for (const Node* s : p->kids) {
        if (s == child) break;
        if (s->kind == NodeKind::IfStatement && mentions(s->kids[0], names) &&
            (exits(s->kids[1]) || (s->kids.size() > 2 && exits(s->kids[2]))))
          return true;
      }
    }
  }
  return false;
}

const Node* resolve_function(const Node* id, const ScopeTable& scopes) {
  if (id == nullptr) return nullptr;
  if (is_function(id)) return id;
  if (id->kind != NodeKind::Identifier) return nullptr;
  const Binding* b = scopes.binding_of(id);
  if (b == nullptr || b->decl == nullptr) return nullptr;
  const Node* p = b->decl->parent;
  if (p != nullptr && p->kind == NodeKind::FunctionDeclaration) return p;
  if (p != nullptr && p->kind == NodeKind::VariableDeclarator && p->kids.size() == 2 && p->kids[0] == b->decl &&
      is_function(p->kids[1]))
    return p->kids[1];
  return nullptr;
}

const Node* const_initializer(const Node* id, const ScopeTable& scopes) {
  if (id == nullptr || id->kind != NodeKind::Identifier) return nullptr;
  const Binding* b = scopes.binding_of(id);
  if (b == nullptr || b->decl == nullptr) return nullptr;
  const Node* p = b->decl->parent;
  if (p == nullptr || p->kind != NodeKind::VariableDeclarator || p->kids.size() != 2 || p->kids[0] != b->decl)
    return nullptr;
  if (b->writes > 0 && b->kind != BindingKind::Const) {
    // the declarator itself may be counted as a write
    uint32_t other = 0;
    for (int r : b->refs) {
      const Reference& ref = scopes.references()[r];
      if (ref.write && ref.id != b->decl) ++other;
    }
    if (other > 0) return nullptr;
  }
  return p->kids[1];
}

std::string call_path(const Node* call) {
  std::string p = callee_path(call);
  if (p.empty()) p = std::string(callee_name(call));
  return p;
}

bool callee_is(const Node* call, std::initializer_list<const char*> paths) {
  std::string p = callee_path(call);
  return std::any_of(paths.begin(), paths.end(), [&](const char* x) { return p == x; });
}

}  // namespace jssec::detail
