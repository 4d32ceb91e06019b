#include <gtest/gtest.h>

#include "jssec/config.hpp"
#include "jssec/glob.hpp"
#include "jssec/patterns.hpp"

using namespace jssec;

TEST(Glob, Segments) {
  EXPECT_TRUE(glob_match("*.js", "a.js"));
  EXPECT_FALSE(glob_match("*.js", "dir/a.js"));
  EXPECT_TRUE(glob_match("**/*.js", "a.js"));
  EXPECT_TRUE(glob_match("**/*.js", "x/y/a.js"));
  EXPECT_TRUE(glob_match("tests/**", "tests/unit/a.js"));
  EXPECT_FALSE(glob_match("tests/**", "src/tests.js"));
  EXPECT_TRUE(glob_match("**/node_modules/**", "app/node_modules/lib/i.js"));
  EXPECT_TRUE(glob_match("./src/?.js", "src/a.js"));
  EXPECT_FALSE(glob_match("src/?.js", "src/ab.js"));
  EXPECT_TRUE(glob_match("**/*.min.js", "dist/app.min.js"));
}

TEST(Patterns, SplitIdentifier) {
  EXPECT_EQ(split_identifier("userPassword"), (std::vector<std::string>{"user", "password"}));
  EXPECT_EQ(split_identifier("API_KEY"), (std::vector<std::string>{"api", "key"}));
  EXPECT_EQ(split_identifier("xmlHTTPRequest"), (std::vector<std::string>{"xml", "http", "request"}));
}

TEST(Patterns, SensitiveNames) {
  CompiledPatterns cp(AnalyzerConfig::defaults());
  EXPECT_TRUE(cp.is_sensitive_name("password"));
  EXPECT_TRUE(cp.is_sensitive_name("dbPassword"));
  EXPECT_TRUE(cp.is_sensitive_name("API_KEY"));
  EXPECT_TRUE(cp.is_sensitive_name("clientSecret"));
  EXPECT_TRUE(cp.is_sensitive_name("authToken"));
  EXPECT_FALSE(cp.is_sensitive_name("passwordField"));
  EXPECT_FALSE(cp.is_sensitive_name("keyCode"));
  EXPECT_FALSE(cp.is_sensitive_name("monkey"));
  EXPECT_FALSE(cp.is_sensitive_name("message"));
}

TEST(Patterns, WeakAlgorithms) {
  CompiledPatterns cp(AnalyzerConfig::defaults());
  EXPECT_TRUE(cp.is_weak_algorithm("md5"));
  EXPECT_TRUE(cp.is_weak_algorithm("SHA-1"));
  EXPECT_TRUE(cp.is_weak_algorithm("sha1"));
  EXPECT_TRUE(cp.is_weak_algorithm("aes-128-ecb"));
  EXPECT_TRUE(cp.is_weak_algorithm("des-ede"));
  EXPECT_TRUE(cp.is_weak_algorithm("RC4"));
  EXPECT_FALSE(cp.is_weak_algorithm("sha256"));
  EXPECT_FALSE(cp.is_weak_algorithm("aes-256-gcm"));
  EXPECT_FALSE(cp.is_weak_algorithm("SHA-512"));
}

TEST(Patterns, Sanitizers) {
  CompiledPatterns cp(AnalyzerConfig::defaults());
  EXPECT_TRUE(cp.is_sanitizer("DOMPurify.sanitize"));
  EXPECT_TRUE(cp.is_sanitizer("escapeHtml"));
  EXPECT_TRUE(cp.is_sanitizer("utils.sanitizeInput"));
  EXPECT_TRUE(cp.is_sanitizer("encodeURIComponent"));
  EXPECT_FALSE(cp.is_sanitizer("decodeURI"));
  EXPECT_FALSE(cp.is_sanitizer("render"));
}

TEST(Patterns, PathMatcher) {
  PathMatcher m(PatternList{"x", {"location", "location.*", "req.query.*"}});
  EXPECT_TRUE(m.matches("location"));
  EXPECT_TRUE(m.matches("location.hash"));
  EXPECT_TRUE(m.matches("req.query.id"));
  EXPECT_FALSE(m.matches("req.query"));
  EXPECT_FALSE(m.matches("mylocation"));
  PathMatcher sinks(PatternList{"y", {"createHash", "res.download"}});
  EXPECT_TRUE(sinks.matches_suffix("crypto.createHash"));
  EXPECT_FALSE(sinks.matches_suffix("crypto.recreateHash"));
  EXPECT_TRUE(sinks.matches_suffix("res.download"));
}
