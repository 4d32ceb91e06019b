#include <gtest/gtest.h>

#include <algorithm>

#include "jssec/scope.hpp"
#include "test_util.hpp"

using namespace jssec;
using jssec::testing::parse;

namespace {

const Binding* find_binding(const ScopeTable& st, const std::string& name) {
  for (const auto& b : st.bindings()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace

TEST(Scope, DeclarationsAndKinds) {
  auto p = parse("var a; let b; const c = 1; function f(x) { var d; } class K {} try {} catch (e) {}");
  ASSERT_TRUE(p->result.ok());
  auto st = build_scope_table(p->tree());
  EXPECT_EQ(find_binding(st, "a")->kind, BindingKind::Var);
  EXPECT_EQ(find_binding(st, "b")->kind, BindingKind::Let);
  EXPECT_EQ(find_binding(st, "c")->kind, BindingKind::Const);
  EXPECT_EQ(find_binding(st, "f")->kind, BindingKind::Function);
  EXPECT_EQ(find_binding(st, "x")->kind, BindingKind::Param);
  EXPECT_EQ(find_binding(st, "K")->kind, BindingKind::Class);
  EXPECT_EQ(find_binding(st, "e")->kind, BindingKind::CatchParam);
  EXPECT_NE(find_binding(st, "d")->scope, 0);
  EXPECT_EQ(st.global_count(), 5u);  // a b c f K
}

TEST(Scope, ImplicitGlobals) {
  auto p = parse("function f() { leak = 1; var ok = 2; ok = 3; other.x = 1; }\nf();");
  ASSERT_TRUE(p->result.ok());
  auto st = build_scope_table(p->tree());
  ASSERT_EQ(st.implicit_globals().size(), 1u);
  EXPECT_EQ(st.bindings()[st.implicit_globals()[0]].name, "leak");
  auto unresolved = st.unresolved_names();
  EXPECT_NE(std::find(unresolved.begin(), unresolved.end(), "other"), unresolved.end());
}

TEST(Scope, BlockScopingAndShadowing) {
  auto p = parse("let v = 1; { let v = 2; use(v); } use(v);");
  ASSERT_TRUE(p->result.ok());
  auto st = build_scope_table(p->tree());
  std::vector<int> targets;
  for (const auto& r : st.references()) {
    if (r.id->value == "v" && r.read) targets.push_back(r.binding);
  }
  ASSERT_EQ(targets.size(), 2u);
  EXPECT_NE(targets[0], targets[1]);
}

TEST(Scope, HoistingResolvesEarlyUse) {
  auto p = parse("g(); function g() { return h; } var h = 1;");
  ASSERT_TRUE(p->result.ok());
  auto st = build_scope_table(p->tree());
  EXPECT_TRUE(st.unresolved_names().empty());
  EXPECT_EQ(find_binding(st, "g")->reads, 1u);
}

TEST(Scope, ModulesHaveNoSharedGlobals) {
  auto p = parse("import a from 'a'; const b = 1; export { b };");
  ASSERT_TRUE(p->result.ok());
  auto st = build_scope_table(p->tree());
  EXPECT_TRUE(st.is_module());
  EXPECT_TRUE(st.global_names().empty());
}

TEST(Scope, ClosureReferencesOuterBinding) {
  auto p = parse("function outer() { var n = 0; return function () { n += 1; return n; }; } outer();");
  ASSERT_TRUE(p->result.ok());
  auto st = build_scope_table(p->tree());
  const Binding* n = find_binding(st, "n");
  ASSERT_NE(n, nullptr);
  EXPECT_GE(n->writes, 1u);
  EXPECT_GE(n->reads, 2u);
  EXPECT_TRUE(st.implicit_globals().empty());
}
