#include <gtest/gtest.h>

#include "jssec/html.hpp"

using namespace jssec;

TEST(Html, ExtractsScriptBlocksHandlersAndUrls) {
  std::string html =
      "<html><head>\n"
      "<script src=\"lib/app.js\"></script>\n"
      "<script>var a = 1;</script>\n"
      "<script type=\"text/template\">not js</script>\n"
      "</head><body>\n"
      "<button onclick=\"foo(&quot;x&quot;);\">Go</button>\n"
      "<a href=\"javascript:bar()\">b</a>\n"
      "</body></html>\n";
  auto ex = extract_scripts_from_html("p.html", html);
  ASSERT_EQ(ex.external_scripts.size(), 1u);
  EXPECT_EQ(ex.external_scripts[0].src, "lib/app.js");
  ASSERT_EQ(ex.units.size(), 3u);
  EXPECT_EQ(ex.units[0].kind(), UnitKind::HtmlScriptBlock);
  EXPECT_EQ(ex.units[0].text(), "var a = 1;");
  EXPECT_EQ(ex.units[1].kind(), UnitKind::HtmlInlineHandler);
  EXPECT_EQ(ex.units[1].text(), "foo(\"x\");");
  ASSERT_TRUE(ex.units[1].html_context().has_value());
  EXPECT_EQ(ex.units[1].html_context()->attribute, "onclick");
  EXPECT_EQ(ex.units[2].text(), "bar()");
}

TEST(Html, OffsetsMapBackThroughEntities) {
  std::string html = "<p onclick=\"a(&quot;q&quot;); b()\">x</p>";
  auto ex = extract_scripts_from_html("p.html", html);
  ASSERT_EQ(ex.units.size(), 1u);
  const auto& u = ex.units[0];
  auto local = static_cast<uint32_t>(u.text().find("b()"));
  EXPECT_EQ(html.substr(u.to_origin_offset(local), 3), "b()");
  Span s = u.span(local, local + 3);
  EXPECT_EQ(s.start_line, 1u);
  EXPECT_EQ(s.start_col, html.find("b()") + 1);
}

TEST(Html, ScriptLinesAreOriginLines) {
  std::string html = "<html>\n<body>\n<script>\nvar x = 1;\nvar y = 2;\n</script>\n";
  auto ex = extract_scripts_from_html("p.html", html);
  ASSERT_EQ(ex.units.size(), 1u);
  const auto& u = ex.units[0];
  auto off = static_cast<uint32_t>(u.text().find("var y"));
  EXPECT_EQ(u.span(off, off + 5).start_line, 5u);
}

TEST(Html, CommentsAndRawTextAreSkipped) {
  std::string html = "<!-- <script>x()</script> -->\n<textarea><script>y()</script></textarea>\n"
                     "<script>z()</script>";
  auto ex = extract_scripts_from_html("p.html", html);
  ASSERT_EQ(ex.units.size(), 1u);
  EXPECT_EQ(ex.units[0].text(), "z()");
}

TEST(Html, MimeTypes) {
  EXPECT_TRUE(is_javascript_mime(""));
  EXPECT_TRUE(is_javascript_mime("text/javascript"));
  EXPECT_TRUE(is_javascript_mime("module"));
  EXPECT_TRUE(is_javascript_mime("Application/JavaScript"));
  EXPECT_FALSE(is_javascript_mime("text/template"));
  EXPECT_FALSE(is_javascript_mime("application/json"));
}
