#include <gtest/gtest.h>

#include <algorithm>

#include "jssec/ast.hpp"
#include "jssec/lexer.hpp"
#include "test_util.hpp"

using namespace jssec;
using jssec::testing::count_of;
using jssec::testing::first_of;
using jssec::testing::parse;

namespace {

std::vector<Token> lex_all(std::string_view text) {
  std::vector<Comment> comments;
  Lexer lx(text, comments, false);
  std::vector<Token> out;
  for (Token t = lx.next(); t.type != Tok::Eof; t = lx.next()) out.push_back(t);
  return out;
}

}  // namespace

TEST(Lexer, TokenKindsAndOffsets) {
  auto toks = lex_all("let x = 0x1F + 'a\\n' + 10n;");
  ASSERT_EQ(toks.size(), 9u);
  EXPECT_TRUE(toks[0].is_name("let"));
  EXPECT_EQ(toks[3].type, Tok::Number);
  EXPECT_EQ(toks[5].type, Tok::String);
  EXPECT_EQ(toks[5].value, "a\n");
  EXPECT_EQ(toks[7].type, Tok::BigInt);
  EXPECT_EQ(toks[1].start, 4u);
  EXPECT_EQ(toks[1].end, 5u);
}

TEST(Lexer, CommentsAreCollectedNotTokenized) {
  std::vector<Comment> comments;
  Lexer lx("a // one\n/* two */ b", comments, false);
  EXPECT_TRUE(lx.next().is_name("a"));
  Token b = lx.next();
  EXPECT_TRUE(b.is_name("b"));
  EXPECT_TRUE(b.nl_before);
  EXPECT_EQ(comments.size(), 2u);
}

TEST(Parser, RegexVersusDivision) {
  auto p = parse("var a = b / c / d;\nvar r = /ab+c/gi.test(a);\n");
  ASSERT_TRUE(p->result.ok());
  EXPECT_EQ(count_of(p->tree(), NodeKind::RegExpLiteral), 1u);
  EXPECT_EQ(count_of(p->tree(), NodeKind::BinaryExpression), 2u);
}

TEST(Parser, AutomaticSemicolonInsertion) {
  auto p = parse("let a = 1\nlet b = a\n++b\nfunction f() {\n  return\n  a\n}\n");
  ASSERT_TRUE(p->result.ok());
  const Node* ret = first_of(p->tree(), NodeKind::ReturnStatement);
  ASSERT_NE(ret, nullptr);
  EXPECT_TRUE(ret->kids.empty());
  EXPECT_EQ(count_of(p->tree(), NodeKind::UpdateExpression), 1u);
}

TEST(Parser, SpansCoverSourceText) {
  std::string text = "foo.bar(1, `x${y}z`);";
  auto p = parse(text);
  ASSERT_TRUE(p->result.ok());
  const Node* call = first_of(p->tree(), NodeKind::CallExpression);
  ASSERT_NE(call, nullptr);
  EXPECT_EQ(text.substr(call->start, call->end - call->start), "foo.bar(1, `x${y}z`)");
  const Node* tpl = first_of(p->tree(), NodeKind::TemplateLiteral);
  EXPECT_EQ(text.substr(tpl->start, tpl->end - tpl->start), "`x${y}z`");
  EXPECT_EQ(callee_path(call), "foo.bar");
}

TEST(Parser, ModernSyntax) {
  auto p = parse(
      "import x from 'm';\n"
      "export const f = async (a = 1, {b, ...c}, ...d) => { for await (const v of a) {} };\n"
      "class K extends x { static s = 1; #p; get g() { return this.#p ?? a?.b; } }\n"
      "const o = { ...f, [k]: 1, m() {}, async *gen() { yield* 1; } };\n");
  ASSERT_TRUE(p->result.ok()) << p->result.error->message;
  EXPECT_TRUE(p->tree().is_module());
  const Node* arrow = first_of(p->tree(), NodeKind::ArrowFunction);
  ASSERT_NE(arrow, nullptr);
  EXPECT_EQ(arrow->param_count, 3u);
  bool newer = false;
  for (const auto& d : p->tree().diagnostics()) newer = newer || d.recoverable;
  EXPECT_TRUE(newer) << "class fields are newer than ES2020";
}

TEST(Parser, SyntaxErrorHasOffset) {
  auto p = parse("let a = 1;\nlet b = (;\n");
  ASSERT_FALSE(p->result.ok());
  EXPECT_EQ(p->file->line_col(p->result.error->offset).first, 2u);
}

TEST(Parser, DivisionAfterParenAndKeywordRegex) {
  auto p = parse("if (a) /x/.test(b);\nvar q = (a) / 2;\nreturn_ = typeof /re/;\n");
  ASSERT_TRUE(p->result.ok());
  EXPECT_EQ(count_of(p->tree(), NodeKind::RegExpLiteral), 2u);
}

TEST(Parser, MemberPathHelpers) {
  auto p = parse("res.status(500).send(err); window.location.href = x; a[b].c();");
  ASSERT_TRUE(p->result.ok());
  std::vector<std::string> names;
  for (const Node& n : p->tree().nodes()) {
    if (n.kind == NodeKind::CallExpression) names.emplace_back(callee_name(&n));
  }
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"c", "send", "status"}));
  const Node* assign = first_of(p->tree(), NodeKind::AssignmentExpression);
  EXPECT_EQ(member_path(assign->kids[0]), "window.location.href");
}

TEST(Parser, EveryNodeInsideParent) {
  auto p = parse("function f(a) { if (a) { return [a, {b: a}]; } else { throw new Error(`e${a}`); } }");
  ASSERT_TRUE(p->result.ok());
  for (const Node& n : p->tree().nodes()) {
    if (n.parent == nullptr) continue;
    EXPECT_LE(n.parent->start, n.start);
    EXPECT_GE(n.parent->end, n.end);
  }
}

TEST(Source, LineColumnsCountCodePoints) {
  SourceFile f("x.js", "a\n\xC3\xA9" "b\r\nc");
  EXPECT_EQ(f.line_col(0), std::make_pair(1u, 1u));
  EXPECT_EQ(f.line_col(4), std::make_pair(2u, 2u));
  EXPECT_EQ(f.line_col(7), std::make_pair(3u, 1u));
}
