#include <algorithm>
#include <regex>

#include "rule_support.hpp"

namespace jssec::detail {

void check_empty_catch(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-004", out);
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::CatchClause) continue;
    const Node* body = n.kids.back();
    if (!body->kids.empty()) continue;
    bool commented = std::any_of(ua.tree->comments().begin(), ua.tree->comments().end(), [&](const Comment& c) {
      return c.start >= body->start && c.end <= body->end;
    });
    if (commented) {
      auto& f = em.emit(&n, "catch block contains only comments");
      f.severity = Severity::Info;
      f.notes.push_back("comment-only");
    } else {
      em.emit(&n, "empty catch block");
    }
  }
}

namespace {

bool is_terminator(const Node* s) {
  switch (s->kind) {
    case NodeKind::ReturnStatement:
    case NodeKind::ThrowStatement:
    case NodeKind::BreakStatement:
    case NodeKind::ContinueStatement:
      return true;
    default:
      return false;
  }
}

// 1 = always true, 0 = always false, -1 = not a literal constant
int constant_truth(const Node* e) {
  switch (e->kind) {
    case NodeKind::BooleanLiteral:
      return e->value == "true" ? 1 : 0;
    case NodeKind::NullLiteral:
      return 0;
    case NodeKind::NumericLiteral: {
      double v = 0;
      try {
        v = std::stod(e->value);
      } catch (...) {
        return -1;
      }
      return v == 0 ? 0 : 1;
    }
    case NodeKind::StringLiteral:
      return e->value.empty() ? 0 : 1;
    case NodeKind::UnaryExpression:
      if (e->value == "!") {
        int t = constant_truth(e->kids[0]);
        return t < 0 ? -1 : 1 - t;
      }
      return -1;
    default:
      return -1;
  }
}

bool exported(const Node* fn_decl, const SyntaxTree& tree, const std::string& name) {
  const Node* p = fn_decl->parent;
  if (p != nullptr &&
      (p->kind == NodeKind::ExportNamedDeclaration || p->kind == NodeKind::ExportDefaultDeclaration))
    return true;
  for (const Node& n : tree.nodes()) {
    if (n.kind == NodeKind::ExportSpecifier && !n.kids.empty() && n.kids[0]->value == name) return true;
    if (n.kind == NodeKind::ExportDefaultDeclaration && !n.kids.empty() &&
        n.kids[0]->kind == NodeKind::Identifier && n.kids[0]->value == name)
      return true;
  }
  return false;
}

}  // namespace

void check_dead_code(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-005", out);
  const SyntaxTree& tree = *ua.tree;

  for (const Node& n : tree.nodes()) {
    // (a) statements after an unconditional jump
    if (n.kind == NodeKind::BlockStatement || n.kind == NodeKind::Program || n.kind == NodeKind::SwitchCase) {
      size_t first = n.kind == NodeKind::SwitchCase && n.has(flag::HasTest) ? 1 : 0;
      const Node* jump = nullptr;
      const Node* lo = nullptr;
      const Node* hi = nullptr;
      for (size_t i = first; i < n.kids.size(); ++i) {
        const Node* s = n.kids[i];
        if (jump == nullptr) {
          if (is_terminator(s)) jump = s;
          continue;
        }
        if (s->kind == NodeKind::FunctionDeclaration || s->kind == NodeKind::EmptyStatement) continue;
        if (lo == nullptr) lo = s;
        hi = s;
      }
      if (lo != nullptr) {
        std::string word = jump->kind == NodeKind::ReturnStatement  ? "return"
                           : jump->kind == NodeKind::ThrowStatement ? "throw"
                           : jump->kind == NodeKind::BreakStatement ? "break"
                                                                    : "continue";
        em.emit_range(lo->start, hi->end, "unreachable code after " + word, "unreachable");
      }
    }
    // (b) branches under literal constant conditions
    if (n.kind == NodeKind::IfStatement) {
      int t = constant_truth(n.kids[0]);
      if (t == 0) em.emit(n.kids[1], "branch never runs: condition is always false", "constant-condition");
      if (t == 1 && n.kids.size() > 2) em.emit(n.kids[2], "else branch never runs: condition is always true",
                                               "constant-condition");
    } else if (n.kind == NodeKind::WhileStatement) {
      if (constant_truth(n.kids[0]) == 0) em.emit(n.kids[1], "loop body never runs: condition is always false",
                                                  "constant-condition");
    } else if (n.kind == NodeKind::ForStatement && n.has(flag::HasTest)) {
      size_t ti = n.has(flag::HasInit) ? 1 : 0;
      if (constant_truth(n.kids[ti]) == 0) em.emit(n.kids.back(), "loop body never runs: condition is always false",
                                                   "constant-condition");
    }
  }

  // (c) function declarations nothing refers to
  const ScopeTable& st = *ua.scopes;
  for (const auto& b : st.bindings()) {
    if (b.kind != BindingKind::Function || b.decl == nullptr) continue;
    const Node* fn = b.decl->parent;
    if (fn == nullptr || fn->kind != NodeKind::FunctionDeclaration) continue;
    bool used = false;
    for (int r : b.refs) {
      const Node* id = st.references()[r].id;
      if (id == b.decl) continue;
      if (id->start >= fn->start && id->end <= fn->end) continue;  // recursion
      used = true;
      break;
    }
    if (used) continue;
    const Scope& scope = st.scopes()[b.scope];
    bool shared = scope.kind == ScopeKind::Global;
    if (shared && ctx.unresolved_reads.count(b.name) != 0) continue;
    if (exported(fn, tree, b.name)) continue;
    auto& f = em.emit(fn, "function '" + b.name + "' is never referenced", "unused-function");
    f.notes.push_back("code can still be invoked dynamically, for example through eval");
  }
}

namespace {

const std::regex& credential_url() {
  static const std::regex re(R"([a-zA-Z][a-zA-Z0-9+.\-]*://[^/\s:@]+:[^/\s@]+@)");
  return re;
}

}  // namespace

void check_hardcoded_secrets(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-008", out);
  const CompiledPatterns& pats = *ctx.patterns;

  auto check_pair = [&](std::string_view name, const Node* value) {
    if (name.empty() || value == nullptr || !is_string_constant(value)) return;
    std::string v = string_constant(value);
    if (v.empty() || pats.is_placeholder(v)) return;
    if (!pats.is_sensitive_name(name)) return;
    em.emit(value, "hard-coded value assigned to sensitive name '" + std::string(name) + "'", "sensitive-name");
  };

  for (const Node& n : ua.tree->nodes()) {
    switch (n.kind) {
      case NodeKind::VariableDeclarator:
        if (n.kids.size() == 2 && n.kids[0]->kind == NodeKind::Identifier) check_pair(n.kids[0]->value, n.kids[1]);
        break;
      case NodeKind::AssignmentExpression: {
        if (n.value != "=") break;
        const Node* t = n.kids[0];
        if (t->kind == NodeKind::Identifier) check_pair(t->value, n.kids[1]);
        else if (t->kind == NodeKind::MemberExpression) check_pair(member_name(t), n.kids[1]);
        break;
      }
      case NodeKind::Property:
        if (n.kids.size() == 2 && n.kids[0] != nullptr) check_pair(property_key(&n), n.kids[1]);
        break;
      case NodeKind::PropertyDefinition:
        if (n.kids.size() == 2) check_pair(property_key(&n), n.kids[1]);
        break;
      case NodeKind::StringLiteral:
      case NodeKind::TemplateElement:
        if (std::regex_search(n.value, credential_url())) {
          em.emit(&n, "URL with embedded credentials", "credential-url");
        }
        break;
      default:
        break;
    }
  }
}

namespace {

bool string_valued(const Node* e, const ScopeTable& st, int depth = 0) {
  if (e == nullptr || depth > 4) return false;
  switch (e->kind) {
    case NodeKind::StringLiteral:
    case NodeKind::TemplateLiteral:
      return true;
    case NodeKind::BinaryExpression:
      return e->value == "+" && (string_valued(e->kids[0], st, depth + 1) || string_valued(e->kids[1], st, depth + 1));
    case NodeKind::Identifier:
      return string_valued(const_initializer(e, st), st, depth + 1);
    default:
      return false;
  }
}

}  // namespace

void check_dynamic_code_execution(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-009", out);
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::CallExpression && n.kind != NodeKind::NewExpression) continue;
    std::string path = callee_path(&n);
    auto args = call_args(&n);
    if (n.kind == NodeKind::CallExpression && (path == "eval" || path == "window.eval" || path == "globalThis.eval")) {
      em.emit(&n, "eval() executes a string as code", "eval");
    } else if ((path == "Function" || path == "window.Function") && !args.empty()) {
      em.emit(&n, "Function constructor compiles a string into code", "function-constructor");
    } else if (n.kind == NodeKind::CallExpression &&
               (path == "setTimeout" || path == "setInterval" || path == "window.setTimeout" ||
                path == "window.setInterval") &&
               !args.empty() && string_valued(args[0], *ua.scopes)) {
      em.emit(&n, path + "() with a string argument evaluates it as code", "timer-string");
    }
  }
}

void check_missing_default(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-010", out);
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::SwitchStatement) continue;
    bool has_default = std::any_of(n.kids.begin() + 1, n.kids.end(),
                                   [](const Node* c) { return !c->has(flag::HasTest); });
    if (!has_default) em.emit(&n, "switch statement has no default case");
  }
}

void check_coupling(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-011", out);
  const SourceUnit& unit = *ua.unit;
  if (unit.kind() == UnitKind::HtmlInlineHandler && unit.html_context()) {
    const auto& hc = *unit.html_context();
    uint32_t end = static_cast<uint32_t>(unit.text().size());
    bool handler = hc.attribute.size() > 2 && hc.attribute.compare(0, 2, "on") == 0;
    if (handler) {
      em.emit_range(0, end, "inline " + hc.attribute + " handler on <" + hc.tag + ">", "inline-handler");
    } else {
      em.emit_range(0, end, "javascript: URL in " + hc.attribute + " of <" + hc.tag + ">", "javascript-url");
    }
  }
  if (ua.tree == nullptr) return;

  static const std::regex html_like(R"(<[a-zA-Z][^>]*>)");
  uint32_t limit = ctx.cfg->threshold("dom_calls");
  auto html_literal = [&](const Node* e) {
    bool found = false;
    walk(e, [&](const Node* k) {
      if ((k->kind == NodeKind::StringLiteral || k->kind == NodeKind::TemplateElement) &&
          std::regex_search(k->value, html_like))
        found = true;
      return !found && !is_function(k);
    });
    return found;
  };
  for (const auto& fm : ua.functions) {
    uint32_t count = 0;
    walk_own_body(fm.node, [&](const Node* n) {
      if (n->kind == NodeKind::CallExpression) {
        std::string path = call_path(n);
        if (ctx.patterns->dom_construction_calls.matches_suffix(path) ||
            ctx.patterns->dom_construction_calls.matches(std::string(callee_name(n))))
          ++count;
      } else if (n->kind == NodeKind::AssignmentExpression && html_literal(n->kids[1])) {
        ++count;
      }
    });
    if (count > limit) {
      em.emit(fm.node, "function '" + fm.name + "' builds markup with " + std::to_string(count) +
                           " DOM construction operations (limit " + std::to_string(limit) + ")",
              "dom-construction");
    }
  }
}

void check_active_debugging(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-013", out);
  bool server = ctx.cfg->profile == Profile::Server;
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind == NodeKind::DebuggerStatement) {
      em.emit(&n, "debugger statement", "debugger");
      continue;
    }
    if (n.kind != NodeKind::CallExpression) continue;
    std::string path = callee_path(&n);
    if (path.empty() || !ctx.patterns->debug_calls.matches(path)) continue;
    if (server && path == "console.error") continue;
    em.emit(&n, path + "() call left in code", path);
  }
}

namespace {

struct AlgoHit {
  const Node* node;
  std::string value;
};

void algorithm_candidates(const Node* arg, const ScopeTable& st, std::vector<AlgoHit>& out, int depth = 0) {
  if (arg == nullptr || depth > 3) return;
  if (is_string_constant(arg)) {
    out.push_back({arg, string_constant(arg)});
  } else if (arg->kind == NodeKind::Identifier) {
    const Node* init = const_initializer(arg, st);
    if (init != nullptr && is_string_constant(init)) out.push_back({arg, string_constant(init)});
  } else if (arg->kind == NodeKind::ObjectExpression) {
    for (const Node* p : arg->kids) {
      if (p->kind != NodeKind::Property || p->kids.size() != 2) continue;
      auto key = property_key(p);
      if (key == "name" || key == "hash" || key == "algorithm") algorithm_candidates(p->kids[1], st, out, depth + 1);
    }
  }
}

}  // namespace

void check_weak_crypto(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-020", out);
  const CompiledPatterns& pats = *ctx.patterns;
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::CallExpression) continue;
    std::string path = call_path(&n);
    if (pats.crypto_sinks.matches_suffix(path)) {
      std::vector<AlgoHit> hits;
      for (const Node* a : call_args(&n)) algorithm_candidates(a, *ua.scopes, hits);
      for (const auto& h : hits) {
        if (pats.is_weak_algorithm(h.value)) {
          em.emit(h.node, "weak algorithm '" + h.value + "' passed to " + path + "()", "weak-algorithm");
        }
      }
      continue;
    }
    // CryptoJS.MD5(...), CryptoJS.DES.encrypt(...)
    const Node* c = callee(&n);
    if (c->kind != NodeKind::MemberExpression) continue;
    auto segs = member_segments(c);
    if (segs.size() < 2 || segs[0] != "CryptoJS") continue;
    for (size_t i = 1; i < segs.size(); ++i) {
      if (pats.is_weak_algorithm(segs[i])) {
        em.emit(c, "weak algorithm " + segs[i] + " used through CryptoJS", "weak-algorithm");
        break;
      }
    }
  }
}

namespace {

std::string url_host(std::string_view url) {
  std::string_view rest = url.substr(7);  // after http://
  size_t end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, end);
  if (auto at = authority.rfind('@'); at != std::string_view::npos) authority = authority.substr(at + 1);
  if (!authority.empty() && authority[0] == '[') {
    auto close = authority.find(']');
    return to_lower(authority.substr(0, close == std::string_view::npos ? authority.size() : close + 1));
  }
  if (auto colon = authority.find(':'); colon != std::string_view::npos) authority = authority.substr(0, colon);
  return to_lower(authority);
}

bool url_ish_name(std::string_view name) {
  static const char* kWords[] = {"url", "uri", "href", "src", "action", "endpoint", "api", "host", "server"};
  for (const auto& w : split_identifier(name)) {
    for (const char* k : kWords) {
      if (w == k) return true;
    }
  }
  return false;
}

bool request_position(const Node* lit) {
  const Node* e = lit;
  if (e->kind == NodeKind::TemplateElement) e = e->parent;
  while (e->parent != nullptr && ((e->parent->kind == NodeKind::BinaryExpression && e->parent->value == "+") ||
                                  e->parent->kind == NodeKind::TemplateLiteral))
    e = e->parent;
  const Node* p = e->parent;
  if (p == nullptr) return false;
  switch (p->kind) {
    case NodeKind::CallExpression:
    case NodeKind::NewExpression:
      return p->kids[0] != e;
    case NodeKind::AssignmentExpression: {
      if (p->kids[1] != e) return false;
      const Node* t = p->kids[0];
      if (t->kind == NodeKind::Identifier) return url_ish_name(t->value);
      if (t->kind == NodeKind::MemberExpression) return url_ish_name(member_name(t));
      return false;
    }
    case NodeKind::VariableDeclarator:
      return p->kids.size() == 2 && p->kids[1] == e && p->kids[0]->kind == NodeKind::Identifier &&
             url_ish_name(p->kids[0]->value);
    case NodeKind::Property:
      return p->kids.size() == 2 && p->kids[1] == e && url_ish_name(property_key(p));
    default:
      return false;
  }
}

}  // namespace

void check_insecure_http(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-021", out);
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::StringLiteral && n.kind != NodeKind::TemplateElement) continue;
    if (n.kind == NodeKind::TemplateElement && n.parent->kids.front() != &n) continue;
    if (n.value.size() < 7 || to_lower(std::string_view(n.value).substr(0, 7)) != "http://") continue;
    std::string host = url_host(n.value);
    if (host == "localhost" || host == "127.0.0.1" || host == "[::1]") continue;
    if (host == "www.w3.org") continue;  // XML namespace names, never fetched
    if (!ctx.cfg->strict_http && !request_position(&n)) continue;
    std::string shown = host.empty() ? "a dynamic host" : host;
    auto& f = em.emit(&n, "plain HTTP URL to " + shown + " (no TLS)", "http-url");
    f.notes.push_back("static approximation: the URL literal is checked, not the runtime protocol");
  }
}

}  // namespace jssec::detail
