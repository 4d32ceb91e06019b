#include "jssec/parser.hpp"

#include <optional>
#include <string>
#include <vector>

#include "jssec/lexer.hpp"

namespace jssec {

namespace {

int binary_precedence(const Token& t, bool no_in) {
  if (t.type == Tok::Name) {
    if (t.escaped) return 0;
    if (t.value == "instanceof") return 7;
    if (t.value == "in") return no_in ? 0 : 7;
    return 0;
  }
  if (t.type != Tok::Punct) return 0;
  const std::string& v = t.value;
  if (v == "??" || v == "||") return 1;
  if (v == "&&") return 2;
  if (v == "|") return 3;
  if (v == "^") return 4;
  if (v == "&") return 5;
  if (v == "==" || v == "!=" || v == "===" || v == "!==") return 6;
  if (v == "<" || v == ">" || v == "<=" || v == ">=") return 7;
  if (v == "<<" || v == ">>" || v == ">>>") return 8;
  if (v == "+" || v == "-") return 9;
  if (v == "*" || v == "/" || v == "%") return 10;
  if (v == "**") return 11;
  return 0;
}

bool is_assign_op(const Token& t) {
  if (t.type != Tok::Punct) return false;
  static constexpr std::string_view kOps[] = {"=",  "+=",  "-=",  "*=",   "/=",  "%=",
                                              "**=", "<<=", ">>=", ">>>=", "&=",  "|=",
                                              "^=", "&&=", "||=", "??="};
  for (auto op : kOps) {
    if (t.value == op) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view text, SyntaxTree& tree)
      : text_(text), tree_(tree), lexer_(text, tree.comments(), true) {}

  void parse_program() {
    advance_initial();
    Node* program = tree_.make(NodeKind::Program, 0);
    while (cur_.type != Tok::Eof) program->kids.push_back(parse_statement_list_item(true));
    program->end = static_cast<uint32_t>(text_.size());
    program->start = 0;
    tree_.set_root(program);
    tree_.set_module(saw_module_syntax_);
    link_parents(program);
  }

 private:
  struct FnContext {
    bool async = false;
    bool generator = false;
    bool function = false;
  };

  // ---- token plumbing ----

  void advance_initial() { cur_ = lexer_.next(); }

  void advance() {
    tree_.tokens().push_back({cur_.start, cur_.end});
    prev_end_ = cur_.end;
    if (peek_) {
      cur_ = std::move(*peek_);
      peek_.reset();
    } else {
      cur_ = lexer_.next();
    }
  }

  const Token& peek() {
    if (!peek_) peek_ = lexer_.next();
    return *peek_;
  }

  bool at(std::string_view punct) const { return cur_.is(punct); }
  bool at_name(std::string_view name) const { return cur_.is_name(name); }

  bool eat(std::string_view punct) {
    if (!at(punct)) return false;
    advance();
    return true;
  }

  void expect(std::string_view punct) {
    if (!eat(punct)) fail(cur_.start, "expected '" + std::string(punct) + "'");
  }

  void expect_name(std::string_view name) {
    if (!at_name(name)) fail(cur_.start, "expected '" + std::string(name) + "'");
    advance();
  }

  [[noreturn]] void fail(uint32_t offset, const std::string& message) {
    throw SyntaxError(offset, message);
  }

  [[noreturn]] void unexpected() {
    if (cur_.type == Tok::Eof) fail(cur_.start, "unexpected end of input");
    std::string text(text_.substr(cur_.start, std::min<uint32_t>(cur_.end - cur_.start, 20)));
    fail(cur_.start, "unexpected token '" + text + "'");
  }

  void consume_semicolon() {
    if (eat(";")) return;
    if (at("}") || cur_.type == Tok::Eof || cur_.nl_before) return;
    unexpected();
  }

  void modern(uint32_t offset, const std::string& what) {
    tree_.diagnostics().push_back(
        {offset, "syntax newer than ECMAScript 2020 (" + what + ")", true});
  }

  Node* start(NodeKind kind) { return tree_.make(kind, cur_.start); }
  Node* start_at(NodeKind kind, uint32_t offset) { return tree_.make(kind, offset); }

  Node* finish(Node* n) {
    n->end = prev_end_;
    return n;
  }

  void link_parents(Node* root) {
    std::vector<Node*> stack{root};
    while (!stack.empty()) {
      Node* n = stack.back();
      stack.pop_back();
      for (Node* k : n->kids) {
        k->parent = n;
        stack.push_back(k);
      }
    }
  }

  FnContext& ctx() { return ctx_.back(); }

  bool is_identifier_token(const Token& t) const {
    if (t.type != Tok::Name) return false;
    if (t.escaped) return true;
    if (is_reserved_word(t.value)) return false;
    return true;
  }

  Node* parse_identifier() {
    if (!is_identifier_token(cur_)) unexpected();
    Node* id = start(NodeKind::Identifier);
    id->value = cur_.value;
    advance();
    return finish(id);
  }

  /// Any IdentifierName (keywords allowed), as used after `.` and in keys.
  Node* parse_identifier_name() {
    if (cur_.type != Tok::Name) unexpected();
    Node* id = start(NodeKind::Identifier);
    id->value = cur_.value;
    advance();
    return finish(id);
  }

  Node* parse_string_literal() {
    if (cur_.type != Tok::String) unexpected();
    Node* s = start(NodeKind::StringLiteral);
    s->value = cur_.value;
    advance();
    return finish(s);
  }

  // ---- statements ----

  Node* parse_statement_list_item(bool top_level) {
    if (at_name("function")) return parse_function(true, false, cur_.start);
    if (at_name("async") && peek().is_name("function") && !peek().nl_before) {
      uint32_t s = cur_.start;
      advance();
      return parse_function(true, true, s);
    }
    if (at_name("class")) return parse_class(true);
    if (at_name("const")) return parse_var_statement();
    if (at_name("let")) {
      const Token& p = peek();
      if (p.type == Tok::Name || p.is("[") || p.is("{")) return parse_var_statement();
    }
    if (at_name("import") && !peek().is("(") && !peek().is(".")) {
      if (!top_level) fail(cur_.start, "import declaration must be at top level");
      return parse_import();
    }
    if (at_name("export")) {
      if (!top_level) fail(cur_.start, "export declaration must be at top level");
      return parse_export();
    }
    return parse_statement();
  }

  Node* parse_statement() {
    if (cur_.type == Tok::Punct) {
      if (at("{")) return parse_block();
      if (at(";")) {
        Node* n = start(NodeKind::EmptyStatement);
        advance();
        return finish(n);
      }
    }
    if (cur_.type == Tok::Name && !cur_.escaped) {
      const std::string& k = cur_.value;
      if (k == "var") return parse_var_statement();
      if (k == "if") return parse_if();
      if (k == "for") return parse_for();
      if (k == "while") return parse_while();
      if (k == "do") return parse_do_while();
      if (k == "continue" || k == "break") return parse_break_continue();
      if (k == "return") return parse_return();
      if (k == "with") return parse_with();
      if (k == "switch") return parse_switch();
      if (k == "throw") return parse_throw();
      if (k == "try") return parse_try();
      if (k == "debugger") {
        Node* n = start(NodeKind::DebuggerStatement);
        advance();
        consume_semicolon();
        return finish(n);
      }
      if (k == "function") return parse_function(true, false, cur_.start);
      if (k == "class") return parse_class(true);
      if (is_identifier_token(cur_) && peek().is(":")) {
        Node* n = start(NodeKind::LabeledStatement);
        n->kids.push_back(parse_identifier());
        expect(":");
        n->kids.push_back(parse_statement());
        return finish(n);
      }
    }
    Node* n = start(NodeKind::ExpressionStatement);
    n->kids.push_back(parse_expression(false));
    consume_semicolon();
    return finish(n);
  }

  Node* parse_block() {
    Node* n = start(NodeKind::BlockStatement);
    expect("{");
    while (!at("}")) {
      if (cur_.type == Tok::Eof) unexpected();
      n->kids.push_back(parse_statement_list_item(false));
    }
    advance();
    return finish(n);
  }

  Node* parse_var_declaration(bool no_in) {
    Node* decl = start(NodeKind::VariableDeclaration);
    decl->value = cur_.value;
    advance();
    do {
      Node* d = start(NodeKind::VariableDeclarator);
      d->kids.push_back(parse_binding_target());
      if (eat("=")) {
        d->kids.push_back(parse_assignment(no_in));
        d->flags |= flag::HasInit;
      }
      decl->kids.push_back(finish(d));
    } while (eat(","));
    return finish(decl);
  }

  Node* parse_var_statement() {
    Node* decl = parse_var_declaration(false);
    consume_semicolon();
    return finish(decl);
  }

  Node* parse_if() {
    Node* n = start(NodeKind::IfStatement);
    advance();
    expect("(");
    n->kids.push_back(parse_expression(false));
    expect(")");
    n->kids.push_back(parse_statement());
    if (at_name("else")) {
      advance();
      n->kids.push_back(parse_statement());
    }
    return finish(n);
  }

  Node* parse_for() {
    uint32_t s = cur_.start;
    advance();
    bool is_await = false;
    if (at_name("await")) {
      is_await = true;
      advance();
    }
    expect("(");
    Node* init = nullptr;
    if (at(";")) {
      // no init
    } else if (at_name("var") || at_name("const") ||
               (at_name("let") && (peek().type == Tok::Name || peek().is("[") || peek().is("{")))) {
      init = parse_var_declaration(true);
    } else {
      init = parse_expression(true);
    }
    if (init != nullptr && (at_name("of") || at_name("in"))) {
      bool of = at_name("of");
      Node* n = start_at(of ? NodeKind::ForOfStatement : NodeKind::ForInStatement, s);
      if (is_await) n->flags |= flag::Await;
      if (init->kind != NodeKind::VariableDeclaration) init = to_pattern(init, false);
      advance();
      n->kids.push_back(init);
      n->kids.push_back(of ? parse_assignment(false) : parse_expression(false));
      expect(")");
      n->kids.push_back(parse_statement());
      return finish(n);
    }
    Node* n = start_at(NodeKind::ForStatement, s);
    if (init != nullptr) {
      n->kids.push_back(init);
      n->flags |= flag::HasInit;
    }
    expect(";");
    if (!at(";")) {
      n->kids.push_back(parse_expression(false));
      n->flags |= flag::HasTest;
    }
    expect(";");
    if (!at(")")) {
      n->kids.push_back(parse_expression(false));
      n->flags |= flag::HasUpdate;
    }
    expect(")");
    n->kids.push_back(parse_statement());
    return finish(n);
  }

  Node* parse_while() {
    Node* n = start(NodeKind::WhileStatement);
    advance();
    expect("(");
    n->kids.push_back(parse_expression(false));
    expect(")");
    n->kids.push_back(parse_statement());
    return finish(n);
  }

  Node* parse_do_while() {
    Node* n = start(NodeKind::DoWhileStatement);
    advance();
    n->kids.push_back(parse_statement());
    expect_name("while");
    expect("(");
    n->kids.push_back(parse_expression(false));
    expect(")");
    eat(";");
    return finish(n);
  }

  Node* parse_break_continue() {
    Node* n = start(at_name("break") ? NodeKind::BreakStatement : NodeKind::ContinueStatement);
    advance();
    if (cur_.type == Tok::Name && !cur_.nl_before && is_identifier_token(cur_)) {
      n->kids.push_back(parse_identifier());
    }
    consume_semicolon();
    return finish(n);
  }

  Node* parse_return() {
    Node* n = start(NodeKind::ReturnStatement);
    advance();
    if (!at(";") && !at("}") && cur_.type != Tok::Eof && !cur_.nl_before) {
      n->kids.push_back(parse_expression(false));
    }
    consume_semicolon();
    return finish(n);
  }

  Node* parse_with() {
    Node* n = start(NodeKind::WithStatement);
    advance();
    expect("(");
    n->kids.push_back(parse_expression(false));
    expect(")");
    n->kids.push_back(parse_statement());
    return finish(n);
  }

  Node* parse_switch() {
    Node* n = start(NodeKind::SwitchStatement);
    advance();
    expect("(");
    n->kids.push_back(parse_expression(false));
    expect(")");
    expect("{");
    while (!at("}")) {
      Node* c = start(NodeKind::SwitchCase);
      if (at_name("case")) {
        advance();
        c->kids.push_back(parse_expression(false));
        c->flags |= flag::HasTest;
      } else if (at_name("default")) {
        advance();
      } else {
        unexpected();
      }
      expect(":");
      while (!at("}") && !at_name("case") && !at_name("default")) {
        if (cur_.type == Tok::Eof) unexpected();
        c->kids.push_back(parse_statement_list_item(false));
      }
      n->kids.push_back(finish(c));
    }
    advance();
    return finish(n);
  }

  Node* parse_throw() {
    Node* n = start(NodeKind::ThrowStatement);
    advance();
    if (cur_.nl_before) fail(cur_.start, "illegal newline after throw");
    n->kids.push_back(parse_expression(false));
    consume_semicolon();
    return finish(n);
  }

  Node* parse_try() {
    Node* n = start(NodeKind::TryStatement);
    advance();
    n->kids.push_back(parse_block());
    if (at_name("catch")) {
      Node* c = start(NodeKind::CatchClause);
      advance();
      if (eat("(")) {
        c->kids.push_back(parse_binding_target());
        c->flags |= flag::HasParam;
        expect(")");
      }
      c->kids.push_back(parse_block());
      n->kids.push_back(finish(c));
      n->flags |= flag::HasHandler;
    }
    if (at_name("finally")) {
      advance();
      n->kids.push_back(parse_block());
      n->flags |= flag::HasFinalizer;
    }
    if (!n->has(flag::HasHandler) && !n->has(flag::HasFinalizer))
      fail(cur_.start, "missing catch or finally after try");
    return finish(n);
  }

  // ---- modules ----

  Node* parse_module_source() {
    expect_name("from");
    return parse_string_literal();
  }

  Node* parse_import() {
    saw_module_syntax_ = true;
    Node* n = start(NodeKind::ImportDeclaration);
    advance();
    if (cur_.type == Tok::String) {
      n->kids.push_back(parse_string_literal());
      consume_semicolon();
      return finish(n);
    }
    if (is_identifier_token(cur_)) {
      Node* spec = start(NodeKind::ImportDefaultSpecifier);
      spec->kids.push_back(parse_identifier());
      n->kids.push_back(finish(spec));
      if (!eat(",")) {
        n->kids.push_back(parse_module_source());
        consume_semicolon();
        return finish(n);
      }
    }
    if (at("*")) {
      Node* spec = start(NodeKind::ImportNamespaceSpecifier);
      advance();
      expect_name("as");
      spec->kids.push_back(parse_identifier());
      n->kids.push_back(finish(spec));
    } else if (eat("{")) {
      while (!at("}")) {
        Node* spec = start(NodeKind::ImportSpecifier);
        Node* imported = cur_.type == Tok::String ? parse_string_literal() : parse_identifier_name();
        spec->kids.push_back(imported);
        if (at_name("as")) {
          advance();
          spec->kids.push_back(parse_identifier());
        } else if (imported->kind != NodeKind::Identifier || is_reserved_word(imported->value)) {
          unexpected();
        }
        n->kids.push_back(finish(spec));
        if (!eat(",")) break;
      }
      expect("}");
    } else {
      unexpected();
    }
    n->kids.push_back(parse_module_source());
    consume_semicolon();
    return finish(n);
  }

  Node* parse_export() {
    saw_module_syntax_ = true;
    uint32_t s = cur_.start;
    advance();
    if (at_name("default")) {
      Node* n = start_at(NodeKind::ExportDefaultDeclaration, s);
      advance();
      if (at_name("function")) {
        n->kids.push_back(parse_function(true, false, cur_.start, true));
      } else if (at_name("async") && peek().is_name("function") && !peek().nl_before) {
        uint32_t fs = cur_.start;
        advance();
        n->kids.push_back(parse_function(true, true, fs, true));
      } else if (at_name("class")) {
        n->kids.push_back(parse_class(true, true));
      } else {
        n->kids.push_back(parse_assignment(false));
        consume_semicolon();
      }
      return finish(n);
    }
    if (at("*")) {
      Node* n = start_at(NodeKind::ExportAllDeclaration, s);
      advance();
      if (at_name("as")) {
        advance();
        n->kids.push_back(cur_.type == Tok::String ? parse_string_literal() : parse_identifier_name());
      }
      n->kids.push_back(parse_module_source());
      consume_semicolon();
      return finish(n);
    }
    Node* n = start_at(NodeKind::ExportNamedDeclaration, s);
    if (eat("{")) {
      while (!at("}")) {
        Node* spec = start(NodeKind::ExportSpecifier);
        spec->kids.push_back(cur_.type == Tok::String ? parse_string_literal() : parse_identifier_name());
        if (at_name("as")) {
          advance();
          spec->kids.push_back(cur_.type == Tok::String ? parse_string_literal() : parse_identifier_name());
        }
        n->kids.push_back(finish(spec));
        if (!eat(",")) break;
      }
      expect("}");
      if (at_name("from")) n->kids.push_back(parse_module_source());
      consume_semicolon();
      return finish(n);
    }
    if (at_name("var") || at_name("let") || at_name("const")) {
      n->kids.push_back(parse_var_statement());
    } else if (at_name("function")) {
      n->kids.push_back(parse_function(true, false, cur_.start));
    } else if (at_name("async")) {
      uint32_t fs = cur_.start;
      advance();
      n->kids.push_back(parse_function(true, true, fs));
    } else if (at_name("class")) {
      n->kids.push_back(parse_class(true));
    } else {
      unexpected();
    }
    return finish(n);
  }

  // ---- functions and classes ----

  Node* parse_function(bool declaration, bool is_async, uint32_t s, bool optional_name = false) {
    expect_name("function");
    Node* fn = start_at(declaration ? NodeKind::FunctionDeclaration : NodeKind::FunctionExpression, s);
    if (is_async) fn->flags |= flag::Async;
    if (eat("*")) fn->flags |= flag::Generator;
    if (cur_.type == Tok::Name && !at("(")) {
      fn->kids.push_back(parse_identifier());
      fn->flags |= flag::HasId;
    } else if (declaration && !optional_name) {
      unexpected();
    }
    if (declaration && !fn->has(flag::HasId)) fn->kind = NodeKind::FunctionDeclaration;
    parse_function_rest(fn);
    return finish(fn);
  }

  void parse_params(Node* fn) {
    expect("(");
    while (!at(")")) {
      if (at("...")) {
        Node* rest = start(NodeKind::RestElement);
        advance();
        rest->kids.push_back(parse_binding_target());
        fn->kids.push_back(finish(rest));
        ++fn->param_count;
        break;
      }
      fn->kids.push_back(parse_binding_element());
      ++fn->param_count;
      if (!eat(",")) break;
    }
    expect(")");
  }

  void parse_function_rest(Node* fn) {
    ctx_.push_back({fn->has(flag::Async), fn->has(flag::Generator), true});
    parse_params(fn);
    fn->kids.push_back(parse_function_body());
    ctx_.pop_back();
  }

  Node* parse_function_body() { return parse_block(); }

  Node* parse_class(bool declaration, bool optional_name = false) {
    Node* cls = start(declaration ? NodeKind::ClassDeclaration : NodeKind::ClassExpression);
    advance();
    if (is_identifier_token(cur_) && !at_name("extends")) {
      cls->kids.push_back(parse_identifier());
      cls->flags |= flag::HasId;
    } else if (declaration && !optional_name) {
      unexpected();
    }
    if (at_name("extends")) {
      advance();
      cls->kids.push_back(parse_lhs_expression());
      cls->flags |= flag::HasSuper;
    }
    Node* body = start(NodeKind::ClassBody);
    expect("{");
    while (!at("}")) {
      if (eat(";")) continue;
      if (cur_.type == Tok::Eof) unexpected();
      body->kids.push_back(parse_class_member());
    }
    advance();
    cls->kids.push_back(finish(body));
    return finish(cls);
  }

  bool key_follows() {
    const Token& p = peek();
    return p.type == Tok::Name || p.type == Tok::String || p.type == Tok::Number ||
           p.type == Tok::BigInt || p.type == Tok::PrivateName || p.is("[") || p.is("*");
  }

  Node* parse_property_key(Node* owner) {
    if (at("[")) {
      advance();
      owner->flags |= flag::Computed;
      Node* k = parse_assignment(false);
      expect("]");
      return k;
    }
    switch (cur_.type) {
      case Tok::Name:
        return parse_identifier_name();
      case Tok::String:
        return parse_string_literal();
      case Tok::Number: {
        Node* k = start(NodeKind::NumericLiteral);
        k->value = cur_.value;
        advance();
        return finish(k);
      }
      case Tok::BigInt: {
        Node* k = start(NodeKind::BigIntLiteral);
        k->value = cur_.value;
        advance();
        return finish(k);
      }
      case Tok::PrivateName: {
        modern(cur_.start, "private class member");
        Node* k = start(NodeKind::PrivateName);
        k->value = cur_.value;
        advance();
        return finish(k);
      }
      default:
        unexpected();
    }
  }

  Node* parse_method_function(uint32_t fn_flags) {
    Node* fn = start(NodeKind::FunctionExpression);
    fn->flags |= fn_flags;
    parse_function_rest(fn);
    return finish(fn);
  }

  Node* parse_class_member() {
    uint32_t s = cur_.start;
    bool is_static = false;
    if (at_name("static") && !peek().is("(") && !peek().is("=") && !peek().is(";") &&
        !peek().is("}")) {
      advance();
      is_static = true;
      if (at("{")) {
        modern(s, "class static block");
        Node* block = start_at(NodeKind::StaticBlock, s);
        advance();
        ctx_.push_back({false, false, true});
        while (!at("}")) {
          if (cur_.type == Tok::Eof) unexpected();
          block->kids.push_back(parse_statement_list_item(false));
        }
        ctx_.pop_back();
        advance();
        return finish(block);
      }
    }
    uint32_t fn_flags = 0;
    std::string kind = "method";
    if (at_name("async") && !peek().nl_before && key_follows()) {
      advance();
      fn_flags |= flag::Async;
    }
    if (at("*")) {
      advance();
      fn_flags |= flag::Generator;
    }
    if ((at_name("get") || at_name("set")) && fn_flags == 0 && key_follows() && !peek().is("*")) {
      kind = cur_.value;
      advance();
    }
    Node* member = start_at(NodeKind::MethodDefinition, s);
    if (is_static) member->flags |= flag::Static;
    Node* key = parse_property_key(member);
    member->kids.push_back(key);
    if (at("(")) {
      if (kind == "method" && !member->has(flag::Computed) && !is_static &&
          key->value == "constructor" && key->kind != NodeKind::PrivateName) {
        kind = "constructor";
      }
      member->value = kind;
      member->kids.push_back(parse_method_function(fn_flags));
      return finish(member);
    }
    if (fn_flags != 0 || kind != "method") unexpected();
    modern(s, "class field");
    member->kind = NodeKind::PropertyDefinition;
    if (eat("=")) {
      ctx_.push_back({false, false, true});
      member->kids.push_back(parse_assignment(false));
      ctx_.pop_back();
      member->flags |= flag::HasInit;
    }
    consume_semicolon();
    return finish(member);
  }

  // ---- binding patterns ----

  Node* parse_binding_target() {
    if (at("[")) return parse_array_binding();
    if (at("{")) return parse_object_binding();
    return parse_binding_identifier();
  }

  Node* parse_binding_identifier() {
    if (cur_.type != Tok::Name) unexpected();
    // `let`, `yield`, `await` etc. are accepted as binding names outside strict contexts
    if (!cur_.escaped && is_reserved_word(cur_.value)) unexpected();
    Node* id = start(NodeKind::Identifier);
    id->value = cur_.value;
    advance();
    return finish(id);
  }

  Node* parse_binding_element() {
    uint32_t s = cur_.start;
    Node* target = parse_binding_target();
    if (at("=")) {
      advance();
      Node* ap = start_at(NodeKind::AssignmentPattern, s);
      ap->kids.push_back(target);
      ap->kids.push_back(parse_assignment(false));
      return finish(ap);
    }
    return target;
  }

  Node* parse_array_binding() {
    Node* n = start(NodeKind::ArrayPattern);
    advance();
    while (!at("]")) {
      if (eat(",")) continue;
      if (at("...")) {
        Node* rest = start(NodeKind::RestElement);
        advance();
        rest->kids.push_back(parse_binding_target());
        n->kids.push_back(finish(rest));
        break;
      }
      n->kids.push_back(parse_binding_element());
      if (!at("]")) expect(",");
    }
    expect("]");
    return finish(n);
  }

  Node* parse_object_binding() {
    Node* n = start(NodeKind::ObjectPattern);
    advance();
    while (!at("}")) {
      if (at("...")) {
        Node* rest = start(NodeKind::RestElement);
        advance();
        rest->kids.push_back(parse_binding_identifier());
        n->kids.push_back(finish(rest));
        break;
      }
      Node* prop = start(NodeKind::Property);
      prop->value = "init";
      if (cur_.type == Tok::Name && !at("[") && (peek().is(",") || peek().is("}") || peek().is("="))) {
        prop->flags |= flag::Shorthand;
        prop->kids.push_back(parse_binding_element());
      } else {
        prop->kids.push_back(parse_property_key(prop));
        expect(":");
        prop->kids.push_back(parse_binding_element());
      }
      n->kids.push_back(finish(prop));
      if (!eat(",")) break;
    }
    expect("}");
    return finish(n);
  }

  /// Reinterprets an expression parsed under the cover grammar as a pattern.
  Node* to_pattern(Node* n, bool binding) {
    switch (n->kind) {
      case NodeKind::Identifier:
      case NodeKind::ObjectPattern:
      case NodeKind::ArrayPattern:
      case NodeKind::AssignmentPattern:
      case NodeKind::RestElement:
        return n;
      case NodeKind::MemberExpression:
        if (binding || n->has(flag::Optional)) fail(n->start, "invalid binding target");
        return n;
      case NodeKind::ArrayExpression:
        n->kind = NodeKind::ArrayPattern;
        for (Node*& k : n->kids) {
          if (k->kind == NodeKind::SpreadElement) {
            k->kind = NodeKind::RestElement;
            k->kids[0] = to_pattern(k->kids[0], binding);
          } else {
            k = to_pattern(k, binding);
          }
        }
        return n;
      case NodeKind::ObjectExpression:
        n->kind = NodeKind::ObjectPattern;
        for (Node*& k : n->kids) {
          if (k->kind == NodeKind::SpreadElement) {
            k->kind = NodeKind::RestElement;
            k->kids[0] = to_pattern(k->kids[0], binding);
          } else if (k->kind == NodeKind::Property) {
            if (k->has(flag::Method) || k->value != "init") fail(k->start, "invalid destructuring target");
            k->kids.back() = to_pattern(k->kids.back(), binding);
          } else {
            fail(k->start, "invalid destructuring target");
          }
        }
        return n;
      case NodeKind::AssignmentExpression:
        if (n->value != "=") fail(n->start, "invalid destructuring default");
        n->kind = NodeKind::AssignmentPattern;
        n->value.clear();
        n->kids[0] = to_pattern(n->kids[0], binding);
        return n;
      default:
        fail(n->start, "invalid assignment target");
    }
  }

  // ---- expressions ----

  Node* parse_expression(bool no_in) {
    uint32_t s = cur_.start;
    Node* first = parse_assignment(no_in);
    if (!at(",")) return first;
    Node* seq = start_at(NodeKind::SequenceExpression, s);
    seq->kids.push_back(first);
    while (eat(",")) seq->kids.push_back(parse_assignment(no_in));
    return finish(seq);
  }

  Node* parse_assignment(bool no_in) {
    if (ctx().generator && at_name("yield")) return parse_yield(no_in);
    uint32_t s = cur_.start;
    Node* left = parse_conditional(no_in);
    if (left->kind == NodeKind::ArrowFunction && left == bare_arrow_) return left;
    if (!is_assign_op(cur_)) return left;
    std::string op = cur_.value;
    if (op == "&&=" || op == "||=" || op == "??=") modern(cur_.start, "logical assignment");
    if (op == "=") {
      left = to_pattern(left, false);
    } else if (left->kind != NodeKind::Identifier && left->kind != NodeKind::MemberExpression) {
      fail(left->start, "invalid assignment target");
    }
    advance();
    Node* n = start_at(NodeKind::AssignmentExpression, s);
    n->value = op;
    n->kids.push_back(left);
    n->kids.push_back(parse_assignment(no_in));
    return finish(n);
  }

  Node* parse_yield(bool no_in) {
    Node* n = start(NodeKind::YieldExpression);
    advance();
    if (!cur_.nl_before) {
      if (eat("*")) {
        n->flags |= flag::Delegate;
        n->kids.push_back(parse_assignment(no_in));
      } else if (!at(")") && !at("]") && !at("}") && !at(",") && !at(";") && !at(":") &&
                 cur_.type != Tok::Eof && !(at_name("in") || at_name("of"))) {
        n->kids.push_back(parse_assignment(no_in));
      }
    }
    return finish(n);
  }

  Node* parse_conditional(bool no_in) {
    uint32_t s = cur_.start;
    Node* test = parse_binary(0, no_in);
    if (test == bare_arrow_ || !at("?")) return test;
    advance();
    Node* n = start_at(NodeKind::ConditionalExpression, s);
    n->kids.push_back(test);
    n->kids.push_back(parse_assignment(false));
    expect(":");
    n->kids.push_back(parse_assignment(no_in));
    return finish(n);
  }

  Node* parse_binary(int min_prec, bool no_in) {
    uint32_t s = cur_.start;
    Node* left = parse_unary();
    if (left == bare_arrow_) return left;
    while (true) {
      int prec = binary_precedence(cur_, no_in);
      if (prec == 0 || prec <= min_prec) {
        // `**` is right-associative
        if (!(prec == 11 && min_prec == 11)) break;
      }
      std::string op = cur_.value;
      advance();
      Node* right = parse_binary(op == "**" ? prec - 1 : prec, no_in);
      bool logical = op == "&&" || op == "||" || op == "??";
      Node* n = start_at(logical ? NodeKind::LogicalExpression : NodeKind::BinaryExpression, s);
      n->value = op;
      n->kids.push_back(left);
      n->kids.push_back(right);
      left = finish(n);
    }
    return left;
  }

  bool await_allowed() {
    if (ctx().async) return true;
    if (ctx().function) return false;
    // top-level await: only when an operand clearly follows on the same line
    const Token& p = peek();
    if (p.nl_before) return false;
    if (p.type == Tok::Name) return !is_reserved_word(p.value) || p.value == "new" ||
                                      p.value == "this" || p.value == "function";
    return p.type == Tok::String || p.type == Tok::Number || p.type == Tok::Template ||
           p.is("[") || p.is("{");
  }

  Node* parse_unary() {
    if (cur_.type == Tok::Punct) {
      const std::string& v = cur_.value;
      if (v == "!" || v == "~" || v == "+" || v == "-") {
        Node* n = start(NodeKind::UnaryExpression);
        n->value = v;
        n->flags |= flag::Prefix;
        advance();
        n->kids.push_back(parse_unary());
        return finish(n);
      }
      if (v == "++" || v == "--") {
        Node* n = start(NodeKind::UpdateExpression);
        n->value = v;
        n->flags |= flag::Prefix;
        advance();
        Node* arg = parse_unary();
        if (arg->kind != NodeKind::Identifier && arg->kind != NodeKind::MemberExpression)
          fail(arg->start, "invalid update target");
        n->kids.push_back(arg);
        return finish(n);
      }
    } else if (cur_.type == Tok::Name && !cur_.escaped) {
      const std::string& v = cur_.value;
      if (v == "delete" || v == "void" || v == "typeof") {
        Node* n = start(NodeKind::UnaryExpression);
        n->value = v;
        n->flags |= flag::Prefix;
        advance();
        n->kids.push_back(parse_unary());
        return finish(n);
      }
      if (v == "await" && await_allowed()) {
        if (!ctx().async) modern(cur_.start, "top-level await");
        Node* n = start(NodeKind::AwaitExpression);
        advance();
        n->kids.push_back(parse_unary());
        return finish(n);
      }
    }
    uint32_t s = cur_.start;
    Node* expr = parse_lhs_expression_with_calls();
    if (expr == bare_arrow_) return expr;
    if ((at("++") || at("--")) && !cur_.nl_before) {
      if (expr->kind != NodeKind::Identifier && expr->kind != NodeKind::MemberExpression)
        fail(expr->start, "invalid update target");
      Node* n = start_at(NodeKind::UpdateExpression, s);
      n->value = cur_.value;
      advance();
      n->kids.push_back(expr);
      return finish(n);
    }
    return expr;
  }

  Node* parse_lhs_expression_with_calls() {
    uint32_t s = cur_.start;
    Node* expr = at_name("new") ? parse_new() : parse_primary();
    if (expr == bare_arrow_) return expr;
    return parse_subscripts(expr, s, true);
  }

  /// LeftHandSideExpression for `extends` clauses.
  Node* parse_lhs_expression() { return parse_lhs_expression_with_calls(); }

  Node* parse_new() {
    uint32_t s = cur_.start;
    advance();
    if (at(".")) {
      advance();
      if (!at_name("target")) unexpected();
      advance();
      Node* meta = start_at(NodeKind::MetaProperty, s);
      meta->value = "new.target";
      return finish(meta);
    }
    Node* n = start_at(NodeKind::NewExpression, s);
    uint32_t cs = cur_.start;
    Node* callee_expr = at_name("new") ? parse_new() : parse_primary();
    if (callee_expr == bare_arrow_) fail(cs, "arrow function cannot be constructed here");
    callee_expr = parse_subscripts(callee_expr, cs, false);
    n->kids.push_back(callee_expr);
    if (at("(")) parse_arguments(n);
    return finish(n);
  }

  void parse_arguments(Node* call) {
    expect("(");
    while (!at(")")) {
      if (at("...")) {
        Node* spread = start(NodeKind::SpreadElement);
        advance();
        spread->kids.push_back(parse_assignment(false));
        call->kids.push_back(finish(spread));
      } else {
        call->kids.push_back(parse_assignment(false));
      }
      if (!eat(",")) break;
    }
    expect(")");
  }

  Node* parse_subscripts(Node* expr, uint32_t s, bool allow_call) {
    while (true) {
      if (at(".")) {
        advance();
        Node* m = start_at(NodeKind::MemberExpression, s);
        m->kids.push_back(expr);
        if (cur_.type == Tok::PrivateName) {
          modern(cur_.start, "private class member");
          Node* p = start(NodeKind::PrivateName);
          p->value = cur_.value;
          advance();
          m->kids.push_back(finish(p));
        } else {
          m->kids.push_back(parse_identifier_name());
        }
        expr = finish(m);
      } else if (at("?.")) {
        if (!allow_call) fail(cur_.start, "optional chain in new expression");
        advance();
        if (at("(")) {
          Node* c = start_at(NodeKind::CallExpression, s);
          c->flags |= flag::Optional;
          c->kids.push_back(expr);
          parse_arguments(c);
          expr = finish(c);
        } else if (at("[")) {
          advance();
          Node* m = start_at(NodeKind::MemberExpression, s);
          m->flags |= flag::Optional | flag::Computed;
          m->kids.push_back(expr);
          m->kids.push_back(parse_expression(false));
          expect("]");
          expr = finish(m);
        } else {
          Node* m = start_at(NodeKind::MemberExpression, s);
          m->flags |= flag::Optional;
          m->kids.push_back(expr);
          m->kids.push_back(parse_identifier_name());
          expr = finish(m);
        }
      } else if (at("[")) {
        advance();
        Node* m = start_at(NodeKind::MemberExpression, s);
        m->flags |= flag::Computed;
        m->kids.push_back(expr);
        m->kids.push_back(parse_expression(false));
        expect("]");
        expr = finish(m);
      } else if (at("(") && allow_call) {
        Node* c = start_at(NodeKind::CallExpression, s);
        c->kids.push_back(expr);
        parse_arguments(c);
        expr = finish(c);
      } else if (cur_.type == Tok::Template) {
        Node* t = start_at(NodeKind::TaggedTemplateExpression, s);
        t->kids.push_back(expr);
        t->kids.push_back(parse_template());
        expr = finish(t);
      } else {
        return expr;
      }
    }
  }

  Node* parse_template() {
    Node* tpl = start(NodeKind::TemplateLiteral);
    while (true) {
      if (cur_.type != Tok::Template) unexpected();
      Node* el = start_at(NodeKind::TemplateElement, cur_.start + 1);
      el->value = cur_.value;
      el->end = cur_.template_tail ? cur_.end - 1 : cur_.end - 2;
      tpl->kids.push_back(el);
      bool tail = cur_.template_tail;
      advance();
      if (tail) break;
      tpl->kids.push_back(parse_expression(false));
      if (!at("}")) unexpected();
      peek_.reset();
      cur_ = lexer_.rescan_template_continuation(cur_);
    }
    return finish(tpl);
  }

  Node* make_arrow(uint32_t s, std::vector<Node*> params, bool is_async) {
    if (cur_.nl_before) fail(cur_.start, "line terminator before arrow");
    expect("=>");
    Node* fn = start_at(NodeKind::ArrowFunction, s);
    if (is_async) fn->flags |= flag::Async;
    for (Node* p : params) {
      if (p->kind == NodeKind::SpreadElement) {
        p->kind = NodeKind::RestElement;
        p->kids[0] = to_pattern(p->kids[0], true);
        fn->kids.push_back(p);
      } else {
        fn->kids.push_back(to_pattern(p, true));
      }
      ++fn->param_count;
    }
    ctx_.push_back({is_async, false, true});
    if (at("{")) {
      fn->kids.push_back(parse_function_body());
    } else {
      fn->flags |= flag::ExpressionBody;
      fn->kids.push_back(parse_assignment(false));
    }
    ctx_.pop_back();
    finish(fn);
    bare_arrow_ = fn;
    return fn;
  }

  Node* parse_paren_or_arrow() {
    uint32_t s = cur_.start;
    advance();
    std::vector<Node*> items;
    bool trailing_comma = false;
    bool has_rest = false;
    while (!at(")")) {
      if (at("...")) {
        Node* rest = start(NodeKind::RestElement);
        advance();
        rest->kids.push_back(parse_binding_target());
        items.push_back(finish(rest));
        has_rest = true;
        break;
      }
      items.push_back(parse_assignment(false));
      if (!at(",")) break;
      advance();
      if (at(")")) trailing_comma = true;
    }
    expect(")");
    if (at("=>")) return make_arrow(s, std::move(items), false);
    if (items.empty() || trailing_comma || has_rest) fail(s, "invalid parenthesized expression");
    bare_arrow_ = nullptr;
    if (items.size() == 1) return items[0];
    Node* seq = start_at(NodeKind::SequenceExpression, items.front()->start);
    seq->kids = std::move(items);
    seq->end = seq->kids.back()->end;
    return seq;
  }

  Node* parse_array_literal() {
    Node* n = start(NodeKind::ArrayExpression);
    advance();
    while (!at("]")) {
      if (eat(",")) continue;
      if (at("...")) {
        Node* spread = start(NodeKind::SpreadElement);
        advance();
        spread->kids.push_back(parse_assignment(false));
        n->kids.push_back(finish(spread));
      } else {
        n->kids.push_back(parse_assignment(false));
      }
      if (!at("]")) expect(",");
    }
    expect("]");
    return finish(n);
  }

  Node* parse_object_literal() {
    Node* n = start(NodeKind::ObjectExpression);
    advance();
    while (!at("}")) {
      if (at("...")) {
        Node* spread = start(NodeKind::SpreadElement);
        advance();
        spread->kids.push_back(parse_assignment(false));
        n->kids.push_back(finish(spread));
      } else {
        n->kids.push_back(parse_object_member());
      }
      if (!eat(",")) break;
    }
    expect("}");
    return finish(n);
  }

  Node* parse_object_member() {
    Node* prop = start(NodeKind::Property);
    prop->value = "init";
    uint32_t fn_flags = 0;
    if (at_name("async") && !peek().nl_before && key_follows()) {
      advance();
      fn_flags |= flag::Async;
    }
    if (at("*")) {
      advance();
      fn_flags |= flag::Generator;
    }
    if ((at_name("get") || at_name("set")) && fn_flags == 0 && key_follows() && !peek().is("*")) {
      prop->value = cur_.value;
      advance();
    }
    bool shorthand_candidate = cur_.type == Tok::Name && fn_flags == 0 && prop->value == "init";
    if (shorthand_candidate && (peek().is(",") || peek().is("}") || peek().is("="))) {
      prop->flags |= flag::Shorthand;
      Node* id = parse_identifier();
      if (at("=")) {
        // CoverInitializedName; only valid once reinterpreted as a pattern
        Node* ap = start_at(NodeKind::AssignmentPattern, id->start);
        advance();
        ap->kids.push_back(id);
        ap->kids.push_back(parse_assignment(false));
        prop->kids.push_back(finish(ap));
      } else {
        prop->kids.push_back(id);
      }
      return finish(prop);
    }
    prop->kids.push_back(parse_property_key(prop));
    if (at("(")) {
      prop->flags |= flag::Method;
      prop->kids.push_back(parse_method_function(fn_flags));
      return finish(prop);
    }
    if (fn_flags != 0 || prop->value != "init") unexpected();
    expect(":");
    prop->kids.push_back(parse_assignment(false));
    return finish(prop);
  }

  Node* parse_primary() {
    bare_arrow_ = nullptr;
    switch (cur_.type) {
      case Tok::Eof:
        unexpected();
      case Tok::Number: {
        if (cur_.numeric_separator) modern(cur_.start, "numeric separator");
        Node* n = start(NodeKind::NumericLiteral);
        n->value = cur_.value;
        advance();
        return finish(n);
      }
      case Tok::BigInt: {
        Node* n = start(NodeKind::BigIntLiteral);
        n->value = cur_.value;
        advance();
        return finish(n);
      }
      case Tok::String:
        return parse_string_literal();
      case Tok::Template:
        return parse_template();
      case Tok::Regex:
        break;
      case Tok::PrivateName:
        unexpected();
      case Tok::Punct: {
        if (at("(")) return parse_paren_or_arrow();
        if (at("[")) return parse_array_literal();
        if (at("{")) return parse_object_literal();
        if (at("/") || at("/=")) {
          peek_.reset();
          cur_ = lexer_.rescan_regex(cur_);
          Node* n = start(NodeKind::RegExpLiteral);
          n->value = cur_.value;
          advance();
          return finish(n);
        }
        unexpected();
      }
      case Tok::Name:
        return parse_name_primary();
    }
    unexpected();
  }

  Node* parse_name_primary() {
    uint32_t s = cur_.start;
    if (!cur_.escaped) {
      const std::string& v = cur_.value;
      if (v == "this") {
        Node* n = start(NodeKind::ThisExpression);
        advance();
        return finish(n);
      }
      if (v == "null") {
        Node* n = start(NodeKind::NullLiteral);
        n->value = "null";
        advance();
        return finish(n);
      }
      if (v == "true" || v == "false") {
        Node* n = start(NodeKind::BooleanLiteral);
        n->value = v;
        advance();
        return finish(n);
      }
      if (v == "function") return parse_function(false, false, s);
      if (v == "class") return parse_class(false);
      if (v == "super") {
        Node* n = start(NodeKind::Super);
        advance();
        return finish(n);
      }
      if (v == "new") return parse_new();
      if (v == "import") {
        advance();
        if (eat(".")) {
          if (!at_name("meta")) unexpected();
          advance();
          saw_module_syntax_ = true;
          Node* meta = start_at(NodeKind::MetaProperty, s);
          meta->value = "import.meta";
          return finish(meta);
        }
        Node* n = start_at(NodeKind::ImportExpression, s);
        expect("(");
        n->kids.push_back(parse_assignment(false));
        expect(")");
        return finish(n);
      }
      if (v == "async" && !peek().nl_before) {
        const Token& p = peek();
        if (p.is_name("function")) {
          advance();
          return parse_function(false, true, s);
        }
        if (is_identifier_token(p)) {
          advance();
          Node* param = parse_identifier();
          std::vector<Node*> params{param};
          return make_arrow(s, std::move(params), true);
        }
        if (p.is("(")) {
          Node* id = parse_identifier();
          Node* call = start_at(NodeKind::CallExpression, s);
          call->kids.push_back(id);
          parse_arguments(call);
          if (at("=>") && !cur_.nl_before) {
            std::vector<Node*> params(call->kids.begin() + 1, call->kids.end());
            return make_arrow(s, std::move(params), true);
          }
          return finish(call);
        }
      }
    }
    Node* id = parse_identifier();
    if (at("=>") && !cur_.nl_before) return make_arrow(s, {id}, false);
    return id;
  }

  std::string_view text_;
  SyntaxTree& tree_;
  Lexer lexer_;
  Token cur_;
  std::optional<Token> peek_;
  uint32_t prev_end_ = 0;
  std::vector<FnContext> ctx_{FnContext{}};
  bool saw_module_syntax_ = false;
  Node* bare_arrow_ = nullptr;
};

}  // namespace

ParseResult parse_text(std::string_view text) {
  ParseResult result;
  SyntaxTree tree;
  try {
    Parser parser(text, tree);
    parser.parse_program();
  } catch (const SyntaxError& e) {
    result.error = ParseDiagnostic{e.offset(), e.what(), false};
    return result;
  }
  result.tree = std::move(tree);
  return result;
}

ParseResult parse_source(const SourceUnit& unit) { return parse_text(unit.text()); }

}  // namespace jssec
