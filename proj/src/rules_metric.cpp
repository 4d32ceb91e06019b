#include <algorithm>
#include <set>

#include "rule_support.hpp"

namespace jssec::detail {

namespace {

std::string limit_text(uint32_t value, uint32_t limit) {
  return std::to_string(value) + " (limit " + std::to_string(limit) + ")";
}

}  // namespace

void check_large_object(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-001", out);
  uint32_t limit = ctx.cfg->threshold("large_object");
  for (const auto& om : ua.objects) {
    if (om.member_count <= limit) continue;
    std::string what = om.kind == ObjectKind::Literal       ? "object literal"
                       : om.kind == ObjectKind::Constructor ? "constructor"
                                                            : "class";
    std::string name = om.name.empty() ? "" : " '" + om.name + "'";
    em.emit(om.node, what + name + " has " + limit_text(om.member_count, limit) + " members");
  }
}

void check_long_function(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-002", out);
  uint32_t limit = ctx.cfg->threshold("function_loc");
  for (const auto& fm : ua.functions) {
    if (fm.logical_loc <= limit) continue;
    em.emit(fm.node, "function '" + fm.name + "' has " + std::to_string(fm.logical_loc) +
                         " logical lines (limit " + std::to_string(limit) + ")",
            "function");
  }
  uint32_t file_limit = ctx.cfg->threshold("file_loc");
  if (ua.logical_loc > file_limit) {
    const auto& text = ua.unit->text();
    auto eol = text.find('\n');
    uint32_t end = eol == std::string::npos ? static_cast<uint32_t>(text.size()) : static_cast<uint32_t>(eol);
    em.emit_range(0, end, "file has " + std::to_string(ua.logical_loc) + " logical lines (limit " +
                              std::to_string(file_limit) + ")",
                  "file");
  }
}

void check_long_parameter_list(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-003", out);
  uint32_t limit = ctx.cfg->threshold("params");
  for (const auto& fm : ua.functions) {
    if (fm.parameter_count <= limit) continue;
    em.emit(fm.node, "function '" + fm.name + "' takes " + limit_text(fm.parameter_count, limit) + " parameters");
  }
}

void check_nested_callback(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-006", out);
  uint32_t limit = ctx.cfg->threshold("callbacks");
  std::set<int> has_deep_child;
  for (const auto& cb : ua.callbacks) {
    if (cb.depth > limit && cb.parent >= 0) has_deep_child.insert(cb.parent);
  }
  for (size_t i = 0; i < ua.callbacks.size(); ++i) {
    const auto& cb = ua.callbacks[i];
    if (cb.depth <= limit || has_deep_child.count(static_cast<int>(i)) != 0) continue;
    em.emit(cb.fn, "callback nested " + std::to_string(cb.depth) + " levels deep (limit " +
                       std::to_string(limit) + ")");
  }
}

void check_excessive_globals(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-007", out);
  const ScopeTable& st = *ua.scopes;
  bool handler = ua.unit->kind() == UnitKind::HtmlInlineHandler;

  std::vector<const Node*> sites;
  for (const auto& b : st.bindings()) {
    if (b.kind == BindingKind::ImplicitGlobal) {
      for (int r : b.refs) {
        if (st.references()[r].write) {
          sites.push_back(st.references()[r].id);
          break;
        }
      }
    } else if (!handler && !st.is_module() && b.scope == 0 && b.kind != BindingKind::Import && b.decl != nullptr) {
      sites.push_back(b.decl);
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Node* a, const Node* b) { return a->start < b->start; });

  uint32_t limit = ctx.cfg->threshold("globals");
  uint32_t count = handler ? static_cast<uint32_t>(st.implicit_globals().size()) : st.global_count();
  if (count > limit && sites.size() > limit) {
    auto& f = em.emit(sites[limit], "unit defines " + limit_text(count, limit) + " global variables", "count");
    f.notes.push_back("first declaration beyond the limit");
  }

  for (int bi : st.implicit_globals()) {
    const Binding& b = st.bindings()[bi];
    for (int r : b.refs) {
      const Reference& ref = st.references()[r];
      if (!ref.write) continue;
      em.emit(ref.id, "assignment to undeclared variable '" + b.name + "' creates an implicit global",
              "implicit-global");
      break;
    }
  }

  auto it = ctx.global_collisions.find(ua.unit->id());
  if (it != ctx.global_collisions.end()) {
    for (const auto& b : st.bindings()) {
      if (b.scope != 0 || b.decl == nullptr || it->second.count(b.name) == 0) continue;
      auto& f = em.emit(b.decl, "global '" + b.name + "' is also declared by another script of the same page",
                        "global-collision");
      f.notes.push_back("heuristic: scripts sharing one page share the global scope");
    }
  }
}

void check_long_prototype_chain(const UnitAnalysis& ua, const RunContext& ctx, std::vector<Finding>& out) {
  Emitter em(ua, ctx, "JSSEC-018", out);
  uint32_t limit = ctx.cfg->threshold("prototype_chain");
  for (const auto& [key, site] : ctx.graph.sites()) {
    if (site.unit_id != ua.unit->id() || site.site == nullptr) continue;
    uint32_t len = ctx.graph.chain_length(key);
    if (len <= limit) continue;
    em.emit(site.site, "prototype chain of '" + site.name + "' is " + std::to_string(len) +
                           " levels deep (limit " + std::to_string(limit) + ")");
  }
}

}  // namespace jssec::detail
