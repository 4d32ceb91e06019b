#include <algorithm>
#include <regex>

#include "rule_support.hpp"

namespace jssec::detail {

namespace {

bool is_path(const Node* n, std::initializer_list<const char*> paths) {
  std::string p = member_path(n);
  return std::any_of(paths.begin(), paths.end(), [&](const char* x) { return p == x; });
}

bool response_call(const Node* call, const CompiledPatterns& pats) {
  std::string path = callee_path(call);
  if (!path.empty() && pats.response_sinks.matches(path)) return true;
  auto name = callee_name(call);
  if (name != "send" && name != "json" && name != "end" && name != "write" && name != "jsonp") return false;
  const Node* root = chain_root(callee(call));
  if (root == nullptr || root->kind != NodeKind::Identifier) return false;
  const auto& r = root->value;
  return r == "res" || r == "response" || r == "resp" || r == "reply";
}

}  // namespace

void check_cross_origin(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-012", out);
  const ScopeTable& st = *ua.scopes;

  auto check_handler = [&](const Node* site, const Node* handler_expr) {
    const Node* fn = resolve_function(handler_expr, st);
    if (fn == nullptr) return;
    auto params = function_params(fn);
    bool verified = false;
    if (!params.empty()) {
      const Node* p = params[0];
      if (p->kind == NodeKind::AssignmentPattern) p = p->kids[0];
      if (p->kind == NodeKind::Identifier) {
        int pb = st.binding_index(p);
        walk(function_body(fn), [&](const Node* n) {
          if (n->kind == NodeKind::MemberExpression) {
            auto name = member_name(n);
            const Node* root = chain_root(n);
            if ((name == "origin" || name == "source") && root != nullptr && root->kind == NodeKind::Identifier &&
                st.binding_index(root) == pb)
              verified = true;
          }
          return !verified;
        });
      } else if (p->kind == NodeKind::ObjectPattern) {
        for (const Node* prop : p->kids) {
          auto key = property_key(prop);
          if (key == "origin" || key == "source") verified = true;
        }
      }
    }
    if (!verified) em.emit(site, "message event handler does not verify event.origin", "unchecked-listener");
  };

  for (const Node& n : ua.tree->nodes()) {
    if (n.kind == NodeKind::CallExpression) {
      auto name = callee_name(&n);
      auto args = call_args(&n);
      if (name == "postMessage" && args.size() >= 2 && is_string_constant(args[1]) &&
          string_constant(args[1]) == "*") {
        em.emit(args[1], "postMessage() with wildcard target origin", "wildcard-origin");
      } else if (name == "addEventListener" && args.size() >= 2 && is_string_constant(args[0]) &&
                 string_constant(args[0]) == "message") {
        check_handler(&n, args[1]);
      }
    } else if (n.kind == NodeKind::AssignmentExpression && n.value == "=") {
      const Node* t = n.kids[0];
      bool onmessage = (t->kind == NodeKind::MemberExpression && member_name(t) == "onmessage") ||
                       (t->kind == NodeKind::Identifier && t->value == "onmessage");
      if (onmessage) check_handler(&n, n.kids[1]);
    }
  }
}

namespace {

struct DomSink {
  const Node* site;
  const Node* value;  // null for document.write without args
  std::string label;
  std::string sub_code;
};

std::vector<DomSink> dom_sinks(const SyntaxTree& tree) {
  std::vector<DomSink> sinks;
  for (const Node& n : tree.nodes()) {
    if (n.kind == NodeKind::AssignmentExpression && (n.value == "=" || n.value == "+=") &&
        n.kids[0]->kind == NodeKind::MemberExpression) {
      auto name = member_name(n.kids[0]);
      if (name == "innerHTML" || name == "outerHTML") {
        sinks.push_back({&n, n.kids[1], std::string(name), "inner-html"});
      }
    } else if (n.kind == NodeKind::CallExpression) {
      auto args = call_args(&n);
      if (callee_name(&n) == "insertAdjacentHTML" && args.size() >= 2) {
        sinks.push_back({&n, args[1], "insertAdjacentHTML", "insert-adjacent-html"});
      } else if (callee_is(&n, {"document.write", "document.writeln", "window.document.write",
                                "window.document.writeln"})) {
        sinks.push_back({&n, args.empty() ? nullptr : args[0], callee_path(&n), "document-write"});
      }
    }
  }
  return sinks;
}

}  // namespace

void check_insecure_dom(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-014", out);
  TaintAnalyzer taint(*ua.scopes, user_input_policy(*ctx.patterns, *ua.scopes));
  for (const auto& s : dom_sinks(*ua.tree)) {
    bool write = s.sub_code == "document-write";
    if (!write) {
      if (is_constant_expression(s.value)) continue;
      if (s.value->kind == NodeKind::CallExpression && ctx.patterns->is_sanitizer(call_path(s.value))) continue;
    }
    std::optional<TaintChain> chain;
    if (s.value != nullptr) chain = taint.taint_of(s.value);
    if (chain) {
      auto& f = em.emit(s.site, "untrusted data from " + chain->front().label + " written to " + s.label, s.sub_code);
      f.severity = Severity::Error;
      em.attach_chain(f, *chain, s.site, s.label);
    } else if (write) {
      em.emit(s.site, s.label + "() writes markup into the document", s.sub_code);
    } else {
      em.emit(s.site, s.label + " assigned a non-constant value", s.sub_code);
    }
  }
}

namespace {

struct RedirectSink {
  const Node* site;
  const Node* value;
  std::string label;
};

std::vector<RedirectSink> redirect_sinks(const SyntaxTree& tree, const ScopeTable& st) {
  std::vector<RedirectSink> sinks;
  for (const Node& n : tree.nodes()) {
    if (n.kind == NodeKind::AssignmentExpression && n.value == "=") {
      const Node* t = n.kids[0];
      if (is_path(t, {"location", "window.location", "document.location", "top.location", "self.location",
                      "location.href", "window.location.href", "document.location.href", "top.location.href",
                      "self.location.href"})) {
        const Node* root = chain_root(t);
        const Binding* b = root != nullptr ? st.binding_of(root) : nullptr;
        if (b != nullptr && b->kind != BindingKind::ImplicitGlobal) continue;
        sinks.push_back({&n, n.kids[1], member_path(t)});
      }
    } else if (n.kind == NodeKind::CallExpression) {
      auto args = call_args(&n);
      if (args.empty()) continue;
      if (callee_is(&n, {"location.assign", "location.replace", "window.location.assign", "window.location.replace",
                         "document.location.assign", "document.location.replace"})) {
        sinks.push_back({&n, args[0], callee_path(&n)});
      } else if (callee_name(&n) == "redirect") {
        const Node* root = chain_root(callee(&n));
        if (root != nullptr && root->kind == NodeKind::Identifier &&
            (root->value == "res" || root->value == "response" || root->value == "resp" || root->value == "reply"))
          sinks.push_back({&n, args.back(), callee_path(&n).empty() ? "redirect" : callee_path(&n)});
      }
    }
  }
  return sinks;
}

bool dangerous_scheme(const std::string& lower) {
  return lower.rfind("javascript:", 0) == 0 || lower.rfind("data:", 0) == 0 || lower.rfind("vbscript:", 0) == 0;
}

}  // namespace

void check_unvalidated_redirect(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-015", out);
  TaintAnalyzer taint(*ua.scopes, user_input_policy(*ctx.patterns, *ua.scopes));
  static const std::regex fixed_origin(R"(^https?://[^/\s]+/)", std::regex::icase);
  for (const auto& s : redirect_sinks(*ua.tree, *ua.scopes)) {
    std::string prefix = constant_prefix(s.value);
    std::string lower = to_lower(prefix);
    size_t ws = lower.find_first_not_of(" \t\r\n");
    lower = ws == std::string::npos ? "" : lower.substr(ws);
    if (dangerous_scheme(lower)) {
      em.emit(s.site, "redirect to a " + lower.substr(0, lower.find(':') + 1) + " URL", "dangerous-scheme");
      continue;
    }
    if (lower.rfind("//", 0) == 0 || lower.rfind("/\\", 0) == 0) {
      auto& f = em.emit(s.site, "protocol-relative redirect target can leave the site", "protocol-relative");
      f.notes.push_back("a leading // is treated as unsafe even though a single / is same-origin");
      continue;
    }
    bool constant = is_constant_expression(s.value);
    if (constant) continue;
    if (lower.size() >= 2 && lower[0] == '/' && lower[1] != '/' && lower[1] != '\\') continue;
    if (std::regex_search(lower, fixed_origin)) continue;
    if (guarded_by(s.site, referenced_names(s.value))) continue;
    auto chain = taint.taint_of(s.value);
    if (chain) {
      auto& f = em.emit(s.site, "redirect target from " + chain->front().label + " is not validated", "unvalidated");
      em.attach_chain(f, *chain, s.site, s.label);
    } else {
      em.emit(s.site, "redirect to a non-constant URL without validation", "unvalidated");
    }
  }
}

namespace {

const std::regex& json_fragment() {
  static const std::regex re(R"(\{\s*"|"\s*:|"\s*,\s*")");
  return re;
}

bool dynamic_part(const Node* p) { return !is_literal(p) && !is_constant_expression(p); }

/// Outermost `+` chains and templates that splice values into JSON-looking text.
std::vector<const Node*> manual_json_sites(const SyntaxTree& tree) {
  std::vector<const Node*> sites;
  for (const Node& n : tree.nodes()) {
    bool concat = n.kind == NodeKind::BinaryExpression && n.value == "+";
    if (!concat && n.kind != NodeKind::TemplateLiteral) continue;
    if (concat && n.parent != nullptr && n.parent->kind == NodeKind::BinaryExpression && n.parent->value == "+")
      continue;
    if (n.parent != nullptr && n.parent->kind == NodeKind::TaggedTemplateExpression) continue;
    auto parts = concat_parts(&n);
    bool hit = false;
    for (size_t i = 0; i < parts.size() && !hit; ++i) {
      if (!dynamic_part(parts[i])) continue;
      std::string t;
      if (i > 0 && literal_text(parts[i - 1], t) && std::regex_search(t, json_fragment())) hit = true;
      if (i + 1 < parts.size() && literal_text(parts[i + 1], t) && std::regex_search(t, json_fragment())) hit = true;
    }
    if (hit) sites.push_back(&n);
  }
  return sites;
}

bool json_named(const Node* e) {
  bool found = false;
  walk(e, [&](const Node* n) {
    if (n->kind == NodeKind::Identifier) {
      for (const auto& w : split_identifier(n->value)) {
        if (w == "json") found = true;
      }
    }
    if ((n->kind == NodeKind::StringLiteral || n->kind == NodeKind::TemplateElement) &&
        std::regex_search(n->value, json_fragment()))
      found = true;
    return !found && !is_function(n);
  });
  return found;
}

bool is_eval(const Node* n) {
  return n->kind == NodeKind::CallExpression && callee_is(n, {"eval", "window.eval", "globalThis.eval"});
}

}  // namespace

void check_json_injection(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-016", out);
  for (const Node* site : manual_json_sites(*ua.tree)) {
    em.emit(site, "JSON text assembled by string concatenation", "manual-json");
  }
  for (const Node& n : ua.tree->nodes()) {
    if (!is_eval(&n)) continue;
    auto args = call_args(&n);
    if (!args.empty() && json_named(args[0])) em.emit(&n, "eval() used to parse JSON", "eval-json");
  }
}

void check_unprotected_cookies(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-017", out);
  static const std::regex secure_attr(R"((^|[;\s])secure\s*(;|$))", std::regex::icase);
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind == NodeKind::AssignmentExpression && n.value == "=" &&
        is_path(n.kids[0], {"document.cookie", "window.document.cookie"})) {
      bool secure = false;
      for (const Node* p : concat_parts(n.kids[1])) {
        std::string t;
        if (literal_text(p, t) && std::regex_search(t, secure_attr)) secure = true;
      }
      if (!secure) em.emit(&n, "cookie written without the Secure attribute", "missing-secure");
    } else if (n.kind == NodeKind::CallExpression && callee_name(&n) == "cookie") {
      const Node* root = chain_root(callee(&n));
      if (root == nullptr || root->kind != NodeKind::Identifier) continue;
      const auto& r = root->value;
      if (r != "res" && r != "response" && r != "resp" && r != "reply") continue;
      auto args = call_args(&n);
      if (args.size() < 2) continue;
      if (args.size() < 3) {
        em.emit(&n, "cookie set without options: Secure and HttpOnly are off", "missing-options");
        continue;
      }
      const Node* opts = args[2];
      if (opts->kind != NodeKind::ObjectExpression) continue;
      bool secure = false;
      bool http_only = false;
      for (const Node* p : opts->kids) {
        if (p->kind != NodeKind::Property) continue;
        auto key = property_key(p);
        const Node* v = p->kids.back();
        bool on = !(v->kind == NodeKind::BooleanLiteral && v->value == "false");
        if (key == "secure") secure = on;
        if (key == "httpOnly") http_only = on;
      }
      if (!secure && !http_only) em.emit(&n, "cookie set without Secure and HttpOnly", "missing-secure");
      else if (!secure) em.emit(&n, "cookie set without Secure", "missing-secure");
      else if (!http_only) em.emit(&n, "cookie set without HttpOnly", "missing-httponly");
    }
  }

  // (c) cookie values reaching a sink without a sanitizer
  TaintAnalyzer taint(*ua.scopes, path_source_policy(*ctx.patterns, {"document.cookie"}));
  auto report = [&](const Node* site, const Node* value, const std::string& label) {
    if (value == nullptr) return;
    auto chain = taint.taint_of(value);
    if (!chain) return;
    auto& f = em.emit(site, "cookie used without validation in " + label, "unvalidated-read");
    f.notes.push_back("validation means passing the value through a configured sanitizer");
    em.attach_chain(f, *chain, site, label);
  };
  for (const auto& s : dom_sinks(*ua.tree)) report(s.site, s.value, s.label);
  for (const auto& s : redirect_sinks(*ua.tree, *ua.scopes)) report(s.site, s.value, s.label);
  for (const Node* site : manual_json_sites(*ua.tree)) report(site, site, "manual JSON");
  for (const Node& n : ua.tree->nodes()) {
    if (!is_eval(&n)) continue;
    auto args = call_args(&n);
    if (!args.empty()) report(&n, args[0], "eval");
  }
}

namespace {

bool key_checked(const Node* scope_node) {
  bool found = false;
  walk(scope_node, [&](const Node* n) {
    if (n->kind == NodeKind::StringLiteral &&
        (n->value == "__proto__" || n->value == "constructor" || n->value == "prototype"))
      found = true;
    return !found;
  });
  return found;
}

bool created_without_prototype(const Node* obj, const ScopeTable& st) {
  const Node* root = obj;
  while (root->kind == NodeKind::MemberExpression) root = root->kids[0];
  const Node* init = const_initializer(root, st);
  if (init == nullptr) {
    // a parameter or reassigned binding: look at the declaration only
    if (root->kind != NodeKind::Identifier) return false;
    const Binding* b = st.binding_of(root);
    if (b == nullptr || b->decl == nullptr || b->decl->parent == nullptr ||
        b->decl->parent->kind != NodeKind::VariableDeclarator || b->decl->parent->kids.size() != 2)
      return false;
    init = b->decl->parent->kids[1];
  }
  if (init->kind != NodeKind::CallExpression || callee_path(init) != "Object.create") return false;
  auto args = call_args(init);
  return !args.empty() && args[0]->kind == NodeKind::NullLiteral;
}

bool is_json_parse(const Node* e) {
  return e != nullptr && e->kind == NodeKind::CallExpression &&
         (callee_path(e) == "JSON.parse" || callee_path(e) == "window.JSON.parse");
}

/// JSON.parse call an expression comes from: directly, or through a local const.
const Node* json_origin(const Node* e, const ScopeTable& st) {
  if (is_json_parse(e)) return e;
  const Node* init = const_initializer(e, st);
  if (is_json_parse(init)) return init;
  return nullptr;
}

}  // namespace

void check_prototype_pollution(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-019", out);
  const ScopeTable& st = *ua.scopes;
  bool frozen = false;
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind == NodeKind::CallExpression && callee_path(&n) == "Object.freeze") {
      auto args = call_args(&n);
      if (!args.empty() && member_path(args[0]) == "Object.prototype") frozen = true;
    }
  }

  TaintAnalyzer taint(st, user_input_policy(*ctx.patterns, st));
  std::set<const Node*> merge_loops;
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind == NodeKind::AssignmentExpression && n.kids[0]->kind == NodeKind::MemberExpression) {
      const Node* t = n.kids[0];
      auto segs = member_segments(t);
      bool proto = std::find(segs.begin(), segs.end(), "__proto__") != segs.end();
      bool object_proto = segs.size() >= 3 && segs[0] == "Object" && segs[1] == "prototype";
      bool ctor_proto = false;
      for (size_t i = 0; i + 1 < segs.size(); ++i) {
        if (segs[i] == "constructor" && segs[i + 1] == "prototype") ctor_proto = true;
      }
      if (proto || object_proto || ctor_proto) {
        std::string what = proto ? "__proto__" : object_proto ? "Object.prototype" : "constructor.prototype";
        em.emit(&n, "write through " + what + " modifies a shared prototype", "prototype-write");
        continue;
      }
      // (b) obj[k1][k2] = v with an attacker-chosen key
      if (frozen || created_without_prototype(t, st)) continue;
      std::vector<const Node*> keys;
      for (const Node* m = t; m->kind == NodeKind::MemberExpression; m = m->kids[0]) {
        if (m->has(flag::Computed)) keys.push_back(m->kids[1]);
      }
      if (keys.size() >= 2) {
        for (const Node* k : keys) {
          if (is_literal(k)) continue;
          if (auto chain = taint.taint_of(k)) {
            auto& f = em.emit(&n, "nested property write with a key from " + chain->front().label, "tainted-key");
            em.attach_chain(f, *chain, &n, "computed key");
            break;
          }
        }
      }
    } else if (n.kind == NodeKind::ForInStatement) {
      merge_loops.insert(&n);
    }
  }
  if (frozen) return;

  // (c) for-in merges of JSON.parse output without a key check
  for (const Node* loop : merge_loops) {
    const Node* left = loop->kids[0];
    if (left->kind == NodeKind::VariableDeclaration && !left->kids.empty()) left = left->kids[0]->kids[0];
    if (left->kind != NodeKind::Identifier) continue;
    int key_binding = st.binding_index(left);
    const Node* src = loop->kids[1];
    const Node* body = loop->kids[2];
    const Node* dst_write = nullptr;
    walk(body, [&](const Node* n) {
      if (dst_write != nullptr) return false;
      if (n->kind == NodeKind::AssignmentExpression && n->kids[0]->kind == NodeKind::MemberExpression &&
          n->kids[0]->has(flag::Computed)) {
        const Node* k = n->kids[0]->kids[1];
        if (k->kind == NodeKind::Identifier && st.binding_index(k) == key_binding &&
            !created_without_prototype(n->kids[0], st))
          dst_write = n;
      }
      return true;
    });
    if (dst_write == nullptr || key_checked(body)) continue;

    const Node* origin = json_origin(src, st);
    std::string where;
    if (origin == nullptr && src->kind == NodeKind::Identifier) {
      // one hop: a parameter of the merge function, fed JSON.parse output by a caller
      const Binding* b = st.binding_of(src);
      if (b != nullptr && b->kind == BindingKind::Param && b->decl != nullptr && is_function(b->decl->parent)) {
        const Node* fn = b->decl->parent;
        auto params = function_params(fn);
        size_t index = 0;
        while (index < params.size() && params[index] != b->decl) ++index;
        const Node* fn_id = function_id(fn);
        const Binding* fb = nullptr;
        if (fn_id != nullptr) fb = st.binding_of(fn_id);
        else if (fn->parent != nullptr && fn->parent->kind == NodeKind::VariableDeclarator)
          fb = st.binding_of(fn->parent->kids[0]);
        if (fb != nullptr && index < params.size()) {
          for (int r : fb->refs) {
            const Node* id = st.references()[r].id;
            const Node* call = id->parent;
            if (call == nullptr || call->kind != NodeKind::CallExpression || callee(call) != id) continue;
            auto args = call_args(call);
            if (index < args.size()) {
              if (const Node* o = json_origin(args[index], st)) {
                origin = o;
                where = " (passed in at " + em.line_ref(call) + ")";
                break;
              }
            }
          }
        }
      }
    }
    if (origin == nullptr) continue;
    auto& f = em.emit(loop, "merges JSON.parse output without rejecting __proto__/constructor keys", "unsafe-merge");
    f.notes.push_back("parsed data from " + em.line_ref(origin) + where);
  }
}

void check_logging_sensitive(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-022", out);
  const CompiledPatterns& pats = *ctx.patterns;
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::CallExpression) continue;
    std::string path = callee_path(&n);
    if (path.empty()) continue;
    bool logger = false;
    for (std::string_view p = path;;) {
      if (pats.logger_paths.matches(p)) {
        logger = true;
        break;
      }
      auto dot = p.find('.');
      if (dot == std::string_view::npos) break;
      p = p.substr(dot + 1);
    }
    if (!logger) continue;
    auto level = callee_name(&n);
    bool error_level = level == "error" || level == "fatal" || level == "critical";
    std::string hit;
    for (const Node* arg : call_args(&n)) {
      walk(arg, [&](const Node* e) {
        if (!hit.empty() || is_function(e)) return false;
        if (e->kind == NodeKind::Identifier) {
          const Node* p = e->parent;
          bool prop_name = p != nullptr && p->kind == NodeKind::MemberExpression && !p->has(flag::Computed) &&
                           p->kids[1] == e;
          bool key = p != nullptr && p->kind == NodeKind::Property && !p->has(flag::Shorthand) &&
                     p->kids.size() == 2 && p->kids[0] == e;
          if (!prop_name && !key && pats.is_sensitive_name(e->value)) hit = e->value;
        } else if (e->kind == NodeKind::MemberExpression) {
          std::string mp = member_path(e);
          auto name = member_name(e);
          if (mp == "document.cookie") hit = mp;
          else if (name == "stack" && !error_level) hit = mp.empty() ? "stack trace" : mp;
          else if (!name.empty() && pats.is_sensitive_name(name)) hit = mp.empty() ? std::string(name) : mp;
        } else if (e->kind == NodeKind::Property && e->kids.size() == 2 && !e->has(flag::Shorthand)) {
          auto key = property_key(e);
          if (!key.empty() && !is_literal(e->kids[1]) && pats.is_sensitive_name(key)) hit = std::string(key);
        }
        return hit.empty();
      });
      if (!hit.empty()) break;
    }
    if (!hit.empty()) em.emit(&n, "sensitive value '" + hit + "' written to the log by " + path + "()");
  }
}

void check_insecure_file_handling(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-023", out);
  const CompiledPatterns& pats = *ctx.patterns;
  const ScopeTable& st = *ua.scopes;
  TaintPolicy policy = user_input_policy(pats, st);
  auto base_source = policy.source;
  std::set<const Node*> upload_sources;
  policy.source = [&, base_source](const Node* e) -> std::optional<std::string> {
    if (e->kind == NodeKind::MemberExpression) {
      std::string mp = member_path(e);
      if (!mp.empty() && pats.upload_fields.matches_suffix(mp)) {
        upload_sources.insert(e);
        return mp;
      }
    }
    return base_source(e);
  };
  TaintAnalyzer taint(st, policy);

  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::CallExpression) continue;
    std::string path = call_path(&n);
    if (!pats.fs_sinks.matches_suffix(path)) continue;
    auto args = call_args(&n);
    size_t path_args = std::min<size_t>(args.size(), (callee_name(&n).find("rename") == 0 ||
                                                      callee_name(&n).find("copyFile") == 0)
                                                         ? 2
                                                         : 1);
    for (size_t i = 0; i < path_args; ++i) {
      auto chain = taint.taint_of(args[i]);
      if (!chain) continue;
      const Node* src = chain->front().node;
      if (upload_sources.count(src) != 0) {
        std::vector<std::string> names = {std::string(member_name(src))};
        for (const auto& step : *chain) {
          if (step.role == "propagation" && step.label.rfind("assigned to ", 0) == 0) names.push_back(step.label.substr(12));
        }
        bool guarded = false;
        const Node* fn = enclosing_function(&n);
        walk_own_body(fn, [&](const Node* k) {
          if (k->kind == NodeKind::IfStatement && k->start < n.start) {
            for (const auto& nm : referenced_names(k->kids[0])) {
              if (std::find(names.begin(), names.end(), nm) != names.end()) guarded = true;
            }
            walk(k->kids[0], [&](const Node* m) {
              if (m->kind == NodeKind::MemberExpression &&
                  std::find(names.begin(), names.end(), std::string(member_name(m))) != names.end())
                guarded = true;
              return !guarded;
            });
          }
        });
        if (guarded) continue;
        auto& f = em.emit(&n, "client-supplied file name " + chain->front().label + " used in a file path by " + path +
                                  "()",
                          "upload-filename");
        em.attach_chain(f, *chain, args[i], path + "() path");
      } else {
        auto& f = em.emit(&n, "file path built from " + chain->front().label + " in " + path + "()", "tainted-path");
        em.attach_chain(f, *chain, args[i], path + "() path");
      }
      break;
    }
  }
}

void check_error_disclosure(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-024", out);
  static const std::regex stack_words(R"(\b(stack|trace)\b)", std::regex::icase);
  TaintAnalyzer taint(*ua.scopes, error_value_policy(*ua.scopes));
  for (const Node& n : ua.tree->nodes()) {
    if (n.kind != NodeKind::CallExpression || !response_call(&n, *ctx.patterns)) continue;
    bool reported = false;
    for (const Node* arg : call_args(&n)) {
      if (auto chain = taint.taint_of(arg)) {
        auto& f = em.emit(&n, "error details from " + chain->front().label + " sent in the response", "error-object");
        em.attach_chain(f, *chain, arg, "response body");
        reported = true;
        break;
      }
    }
    if (reported) continue;
    for (const Node* arg : call_args(&n)) {
      if (is_constant_expression(arg)) continue;
      bool words = false;
      walk(arg, [&](const Node* k) {
        if ((k->kind == NodeKind::StringLiteral || k->kind == NodeKind::TemplateElement) &&
            std::regex_search(k->value, stack_words))
          words = true;
        if (k->kind == NodeKind::Property && !k->has(flag::Computed) && k->kids.size() == 2 &&
            std::regex_search(std::string(property_key(k)), stack_words) && !is_literal(k->kids[1]))
          words = true;
        return !words && !is_function(k);
      });
      if (words) {
        em.emit(&n, "response includes stack/trace details", "stack-text");
        break;
      }
    }
  }
}

}  // namespace jssec::detail
