#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jssec {

// Child layouts (children are always stored in source order):
//
//   Program                 statements...
//   VariableDeclaration     declarators...            value = var|let|const
//   VariableDeclarator      target [init]             HasInit
//   FunctionDeclaration,
//   FunctionExpression,
//   ArrowFunction           [id] params... body       HasId, param_count
//   ClassDeclaration,
//   ClassExpression         [id] [super] ClassBody    HasId, HasSuper
//   MethodDefinition        key FunctionExpression    value = method|get|set|constructor
//   PropertyDefinition      key [value]               HasInit
//   Property                key value | value         Shorthand, Computed, value = init|get|set
//   CallExpression,
//   NewExpression           callee args...
//   MemberExpression        object property           Computed, Optional
//   TemplateLiteral         TemplateElement (expr TemplateElement)*
//   IfStatement             test consequent [alternate]
//   ForStatement            [init] [test] [update] body   HasInit, HasTest, HasUpdate
//   TryStatement            block [CatchClause] [finalizer]   HasHandler, HasFinalizer
//   CatchClause             [param] body              HasParam
//   SwitchCase              [test] statements...      HasTest
//
// Every other kind lists its operands left to right.
enum class NodeKind : uint8_t {
  Program,
  // statements
  EmptyStatement,
  BlockStatement,
  ExpressionStatement,
  VariableDeclaration,
  VariableDeclarator,
  FunctionDeclaration,
  ClassDeclaration,
  ReturnStatement,
  IfStatement,
  SwitchStatement,
  SwitchCase,
  ThrowStatement,
  TryStatement,
  CatchClause,
  WhileStatement,
  DoWhileStatement,
  ForStatement,
  ForInStatement,
  ForOfStatement,
  BreakStatement,
  ContinueStatement,
  LabeledStatement,
  WithStatement,
  DebuggerStatement,
  ImportDeclaration,
  ImportSpecifier,
  ImportDefaultSpecifier,
  ImportNamespaceSpecifier,
  ExportNamedDeclaration,
  ExportDefaultDeclaration,
  ExportAllDeclaration,
  ExportSpecifier,
  // expressions
  Identifier,
  PrivateName,
  ThisExpression,
  Super,
  StringLiteral,
  NumericLiteral,
  BigIntLiteral,
  BooleanLiteral,
  NullLiteral,
  RegExpLiteral,
  TemplateLiteral,
  TemplateElement,
  TaggedTemplateExpression,
  ArrayExpression,
  ObjectExpression,
  Property,
  FunctionExpression,
  ArrowFunction,
  ClassExpression,
  ClassBody,
  MethodDefinition,
  PropertyDefinition,
  StaticBlock,
  UnaryExpression,
  UpdateExpression,
  BinaryExpression,
  LogicalExpression,
  AssignmentExpression,
  ConditionalExpression,
  CallExpression,
  NewExpression,
  MemberExpression,
  SequenceExpression,
  SpreadElement,
  YieldExpression,
  AwaitExpression,
  MetaProperty,
  ImportExpression,
  // patterns
  ObjectPattern,
  ArrayPattern,
  AssignmentPattern,
  RestElement,
};

std::string_view to_string(NodeKind kind);

namespace flag {
inline constexpr uint32_t Computed = 1u << 0;
inline constexpr uint32_t Optional = 1u << 1;
inline constexpr uint32_t Async = 1u << 2;
inline constexpr uint32_t Generator = 1u << 3;
inline constexpr uint32_t Static = 1u << 4;
inline constexpr uint32_t Prefix = 1u << 5;
inline constexpr uint32_t Shorthand = 1u << 6;
inline constexpr uint32_t HasId = 1u << 7;
inline constexpr uint32_t HasInit = 1u << 8;
inline constexpr uint32_t HasTest = 1u << 9;
inline constexpr uint32_t HasUpdate = 1u << 10;
inline constexpr uint32_t HasParam = 1u << 11;
inline constexpr uint32_t HasSuper = 1u << 12;
inline constexpr uint32_t HasHandler = 1u << 13;
inline constexpr uint32_t HasFinalizer = 1u << 14;
inline constexpr uint32_t ExpressionBody = 1u << 15;
inline constexpr uint32_t Delegate = 1u << 16;
inline constexpr uint32_t Method = 1u << 17;
inline constexpr uint32_t Await = 1u << 18;
}  // namespace flag

struct Node {
  NodeKind kind;
  uint32_t id = 0;
  uint32_t start = 0;
  uint32_t end = 0;
  Node* parent = nullptr;
  std::vector<Node*> kids;
  /// Identifier name, operator, cooked literal value or declaration kind.
  std::string value;
  uint32_t flags = 0;
  uint32_t param_count = 0;

  bool has(uint32_t f) const { return (flags & f) != 0; }
  bool is(NodeKind k) const { return kind == k; }
};

struct Comment {
  uint32_t start;
  uint32_t end;
  bool block;
};

/// Extent of one lexical token in unit-local bytes.
struct TokenExtent {
  uint32_t start;
  uint32_t end;
};

struct ParseDiagnostic {
  uint32_t offset = 0;
  std::string message;
  bool recoverable = false;
};

class SyntaxTree {
 public:
  SyntaxTree() = default;
  SyntaxTree(SyntaxTree&&) noexcept = default;
  SyntaxTree& operator=(SyntaxTree&&) noexcept = default;
  SyntaxTree(const SyntaxTree&) = delete;
  SyntaxTree& operator=(const SyntaxTree&) = delete;

  Node* make(NodeKind kind, uint32_t start);

  Node* root() const { return root_; }
  void set_root(Node* root) { root_ = root; }

  bool is_module() const { return is_module_; }
  void set_module(bool m) { is_module_ = m; }

  const std::deque<Node>& nodes() const { return nodes_; }
  size_t node_count() const { return nodes_.size(); }

  std::vector<Comment>& comments() { return comments_; }
  const std::vector<Comment>& comments() const { return comments_; }
  std::vector<TokenExtent>& tokens() { return tokens_; }
  const std::vector<TokenExtent>& tokens() const { return tokens_; }
  std::vector<ParseDiagnostic>& diagnostics() { return diagnostics_; }
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

  /// Whether [start, end) overlaps a comment.
  bool in_comment(uint32_t offset) const;

 private:
  std::deque<Node> nodes_;
  Node* root_ = nullptr;
  bool is_module_ = false;
  std::vector<Comment> comments_;
  std::vector<TokenExtent> tokens_;
  std::vector<ParseDiagnostic> diagnostics_;
};

// ---- traversal ----

/// Pre-order walk. Returning false from the visitor skips the node's children.
void walk(const Node* node, const std::function<bool(const Node*)>& visit);

/// Pre-order walk that does not descend into nested function bodies or
/// class bodies (the start node itself is always entered).
void walk_own_body(const Node* node, const std::function<void(const Node*)>& visit);

bool is_function(const Node* n);
bool is_class(const Node* n);
bool is_literal(const Node* n);

/// Nearest enclosing function-like node (or Program) of n, excluding n itself.
const Node* enclosing_function(const Node* n);

// ---- kind-specific accessors ----

const Node* function_id(const Node* fn);
std::span<Node* const> function_params(const Node* fn);
const Node* function_body(const Node* fn);

const Node* callee(const Node* call);
std::span<Node* const> call_args(const Node* call);

/// Static name of a member property: identifier name or computed string literal.
std::string_view member_name(const Node* member);

/// Dotted path of an identifier/member chain ("window.location.href");
/// `this` becomes "this". Empty when any link is dynamic.
std::string member_path(const Node* n);

/// Dotted path of a call's callee, or empty.
std::string callee_path(const Node* call);

/// Last segment of a callee path ("send" for res.status(500).send).
std::string_view callee_name(const Node* call);

/// Root identifier of a member/call chain (res for res.status(500).send), or null.
const Node* chain_root(const Node* n);

/// Static key of a Property/MethodDefinition/PropertyDefinition, or empty.
std::string_view property_key(const Node* prop);

/// True when n is a string literal or a template literal without substitutions.
bool is_string_constant(const Node* n);

/// Cooked value of a string constant; empty when n is not one.
std::string string_constant(const Node* n);

/// True when the expression is built solely from constants (literals, and
/// concatenations/templates of literals).
bool is_constant_expression(const Node* n);

}  // namespace jssec
