#include "jssec/ast.hpp"

#include <algorithm>

namespace jssec {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
#define JSSEC_KIND(k) \
  case NodeKind::k:   \
    return #k;
    JSSEC_KIND(Program)
    JSSEC_KIND(EmptyStatement)
    JSSEC_KIND(BlockStatement)
    JSSEC_KIND(ExpressionStatement)
    JSSEC_KIND(VariableDeclaration)
    JSSEC_KIND(VariableDeclarator)
    JSSEC_KIND(FunctionDeclaration)
    JSSEC_KIND(ClassDeclaration)
    JSSEC_KIND(ReturnStatement)
    JSSEC_KIND(IfStatement)
    JSSEC_KIND(SwitchStatement)
    JSSEC_KIND(SwitchCase)
    JSSEC_KIND(ThrowStatement)
    JSSEC_KIND(TryStatement)
    JSSEC_KIND(CatchClause)
    JSSEC_KIND(WhileStatement)
    JSSEC_KIND(DoWhileStatement)
    JSSEC_KIND(ForStatement)
    JSSEC_KIND(ForInStatement)
    JSSEC_KIND(ForOfStatement)
    JSSEC_KIND(BreakStatement)
    JSSEC_KIND(ContinueStatement)
    JSSEC_KIND(LabeledStatement)
    JSSEC_KIND(WithStatement)
    JSSEC_KIND(DebuggerStatement)
    JSSEC_KIND(ImportDeclaration)
    JSSEC_KIND(ImportSpecifier)
    JSSEC_KIND(ImportDefaultSpecifier)
    JSSEC_KIND(ImportNamespaceSpecifier)
    JSSEC_KIND(ExportNamedDeclaration)
    JSSEC_KIND(ExportDefaultDeclaration)
    JSSEC_KIND(ExportAllDeclaration)
    JSSEC_KIND(ExportSpecifier)
    JSSEC_KIND(Identifier)
    JSSEC_KIND(PrivateName)
    JSSEC_KIND(ThisExpression)
    JSSEC_KIND(Super)
    JSSEC_KIND(StringLiteral)
    JSSEC_KIND(NumericLiteral)
    JSSEC_KIND(BigIntLiteral)
    JSSEC_KIND(BooleanLiteral)
    JSSEC_KIND(NullLiteral)
    JSSEC_KIND(RegExpLiteral)
    JSSEC_KIND(TemplateLiteral)
    JSSEC_KIND(TemplateElement)
    JSSEC_KIND(TaggedTemplateExpression)
    JSSEC_KIND(ArrayExpression)
    JSSEC_KIND(ObjectExpression)
    JSSEC_KIND(Property)
    JSSEC_KIND(FunctionExpression)
    JSSEC_KIND(ArrowFunction)
    JSSEC_KIND(ClassExpression)
    JSSEC_KIND(ClassBody)
    JSSEC_KIND(MethodDefinition)
    JSSEC_KIND(PropertyDefinition)
    JSSEC_KIND(StaticBlock)
    JSSEC_KIND(UnaryExpression)
    JSSEC_KIND(UpdateExpression)
    JSSEC_KIND(BinaryExpression)
    JSSEC_KIND(LogicalExpression)
    JSSEC_KIND(AssignmentExpression)
    JSSEC_KIND(ConditionalExpression)
    JSSEC_KIND(CallExpression)
    JSSEC_KIND(NewExpression)
    JSSEC_KIND(MemberExpression)
    JSSEC_KIND(SequenceExpression)
    JSSEC_KIND(SpreadElement)
    JSSEC_KIND(YieldExpression)
    JSSEC_KIND(AwaitExpression)
    JSSEC_KIND(MetaProperty)
    JSSEC_KIND(ImportExpression)
    JSSEC_KIND(ObjectPattern)
    JSSEC_KIND(ArrayPattern)
    JSSEC_KIND(AssignmentPattern)
    JSSEC_KIND(RestElement)
#undef JSSEC_KIND
  }
  return "?";
}

Node* SyntaxTree::make(NodeKind kind, uint32_t start) {
  Node& n = nodes_.emplace_back();
  n.kind = kind;
  n.id = static_cast<uint32_t>(nodes_.size() - 1);
  n.start = start;
  n.end = start;
  return &n;
}

bool SyntaxTree::in_comment(uint32_t offset) const {
  auto it = std::upper_bound(comments_.begin(), comments_.end(), offset,
                             [](uint32_t v, const Comment& c) { return v < c.start; });
  if (it == comments_.begin()) return false;
  --it;
  return offset >= it->start && offset < it->end;
}

void walk(const Node* node, const std::function<bool(const Node*)>& visit) {
  if (node == nullptr) return;
  std::vector<const Node*> stack{node};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!visit(n)) continue;
    for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) stack.push_back(*it);
  }
}

void walk_own_body(const Node* node, const std::function<void(const Node*)>& visit) {
  walk(node, [&](const Node* n) {
    if (n != node && (is_function(n) || n->kind == NodeKind::ClassBody)) return false;
    visit(n);
    return true;
  });
}

bool is_function(const Node* n) {
  return n != nullptr && (n->kind == NodeKind::FunctionDeclaration ||
                          n->kind == NodeKind::FunctionExpression ||
                          n->kind == NodeKind::ArrowFunction);
}

bool is_class(const Node* n) {
  return n != nullptr &&
         (n->kind == NodeKind::ClassDeclaration || n->kind == NodeKind::ClassExpression);
}

bool is_literal(const Node* n) {
  switch (n->kind) {
    case NodeKind::StringLiteral:
    case NodeKind::NumericLiteral:
    case NodeKind::BigIntLiteral:
    case NodeKind::BooleanLiteral:
    case NodeKind::NullLiteral:
    case NodeKind::RegExpLiteral:
      return true;
    default:
      return false;
  }
}

const Node* enclosing_function(const Node* n) {
  for (const Node* p = n->parent; p != nullptr; p = p->parent) {
    if (is_function(p) || p->kind == NodeKind::Program) return p;
  }
  return nullptr;
}

const Node* function_id(const Node* fn) {
  return fn->has(flag::HasId) ? fn->kids.front() : nullptr;
}

std::span<Node* const> function_params(const Node* fn) {
  size_t first = fn->has(flag::HasId) ? 1 : 0;
  return std::span<Node* const>(fn->kids).subspan(first, fn->param_count);
}

const Node* function_body(const Node* fn) { return fn->kids.back(); }

const Node* callee(const Node* call) { return call->kids.front(); }

std::span<Node* const> call_args(const Node* call) {
  return std::span<Node* const>(call->kids).subspan(1);
}

std::string_view member_name(const Node* member) {
  if (member->kind != NodeKind::MemberExpression) return {};
  const Node* prop = member->kids[1];
  if (!member->has(flag::Computed)) return prop->value;
  if (prop->kind == NodeKind::StringLiteral) return prop->value;
  return {};
}

std::string member_path(const Node* n) {
  switch (n->kind) {
    case NodeKind::Identifier:
      return n->value;
    case NodeKind::ThisExpression:
      return "this";
    case NodeKind::MemberExpression: {
      std::string_view name = member_name(n);
      if (name.empty()) return {};
      std::string base = member_path(n->kids[0]);
      if (base.empty()) return {};
      base += '.';
      base += name;
      return base;
    }
    default:
      return {};
  }
}

std::string callee_path(const Node* call) {
  if (call->kind != NodeKind::CallExpression && call->kind != NodeKind::NewExpression) return {};
  return member_path(callee(call));
}

std::string_view callee_name(const Node* call) {
  if (call->kind != NodeKind::CallExpression && call->kind != NodeKind::NewExpression) return {};
  const Node* c = callee(call);
  if (c->kind == NodeKind::Identifier) return c->value;
  if (c->kind == NodeKind::MemberExpression) return member_name(c);
  return {};
}

const Node* chain_root(const Node* n) {
  while (n != nullptr) {
    switch (n->kind) {
      case NodeKind::Identifier:
      case NodeKind::ThisExpression:
        return n;
      case NodeKind::MemberExpression:
        n = n->kids[0];
        break;
      case NodeKind::CallExpression:
        n = n->kids[0];
        break;
      default:
        return nullptr;
    }
  }
  return nullptr;
}

std::string_view property_key(const Node* prop) {
  if (prop->kids.empty()) return {};
  if (prop->kind == NodeKind::Property && prop->has(flag::Shorthand)) {
    const Node* v = prop->kids[0];
    if (v->kind == NodeKind::AssignmentPattern) v = v->kids[0];
    return v->kind == NodeKind::Identifier ? std::string_view(v->value) : std::string_view{};
  }
  const Node* key = prop->kids[0];
  if (prop->has(flag::Computed)) {
    return key->kind == NodeKind::StringLiteral ? std::string_view(key->value)
                                                : std::string_view{};
  }
  switch (key->kind) {
    case NodeKind::Identifier:
    case NodeKind::StringLiteral:
    case NodeKind::NumericLiteral:
    case NodeKind::PrivateName:
      return key->value;
    default:
      return {};
  }
}

bool is_string_constant(const Node* n) {
  if (n->kind == NodeKind::StringLiteral) return true;
  return n->kind == NodeKind::TemplateLiteral && n->kids.size() == 1;
}

std::string string_constant(const Node* n) {
  if (n->kind == NodeKind::StringLiteral) return n->value;
  if (n->kind == NodeKind::TemplateLiteral && n->kids.size() == 1) return n->kids[0]->value;
  return {};
}

bool is_constant_expression(const Node* n) {
  switch (n->kind) {
    case NodeKind::StringLiteral:
    case NodeKind::NumericLiteral:
    case NodeKind::BigIntLiteral:
    case NodeKind::BooleanLiteral:
    case NodeKind::NullLiteral:
    case NodeKind::TemplateElement:
      return true;
    case NodeKind::TemplateLiteral:
    case NodeKind::BinaryExpression:
      return std::all_of(n->kids.begin(), n->kids.end(),
                         [](const Node* k) { return is_constant_expression(k); });
    default:
      return false;
  }
}

}  // namespace jssec
