#include <gtest/gtest.h>

#include <json.hpp>

#include "jssec/config.hpp"
#include "jssec/mapping.hpp"

using namespace jssec;

TEST(Config, Defaults) {
  auto cfg = AnalyzerConfig::defaults();
  EXPECT_EQ(cfg.rules.size(), 24u);
  EXPECT_EQ(cfg.threshold("large_object"), 20u);
  EXPECT_EQ(cfg.threshold("function_loc"), 50u);
  EXPECT_EQ(cfg.threshold("params"), 5u);
  EXPECT_EQ(cfg.threshold("callbacks"), 3u);
  EXPECT_EQ(cfg.threshold("globals"), 10u);
  EXPECT_EQ(cfg.threshold("dom_calls"), 5u);
  EXPECT_EQ(cfg.threshold("file_loc"), 1000u);
  EXPECT_EQ(cfg.threshold("prototype_chain"), 7u);
  EXPECT_EQ(cfg.thresholds.at("file_loc").source, ThresholdSource::PaperCited);
  EXPECT_EQ(cfg.thresholds.at("prototype_chain").source, ThresholdSource::PaperCited);
  EXPECT_EQ(cfg.thresholds.at("params").source, ThresholdSource::Default);
  for (const auto& r : rule_table()) EXPECT_TRUE(cfg.rule_active(r.id)) << r.id;
}

TEST(Config, MergeRulesAndThresholds) {
  auto cfg = AnalyzerConfig::defaults();
  merge_config_json(cfg, R"({
    "rules": {"JSSEC-013": false, "JSSEC-004": {"severity": "error", "exclude": ["vendor/**"]}},
    "thresholds": {"params": 8, "file_loc": 1000, "prototype_chain": 9}
  })");
  EXPECT_FALSE(cfg.rule_active("JSSEC-013"));
  EXPECT_EQ(cfg.rules.at("JSSEC-004").severity, Severity::Error);
  EXPECT_TRUE(cfg.rule_excluded_for("JSSEC-004", "vendor/x/a.js"));
  EXPECT_FALSE(cfg.rule_excluded_for("JSSEC-004", "src/a.js"));
  EXPECT_EQ(cfg.threshold("params"), 8u);
  // same value keeps its provenance, a new value does not
  EXPECT_EQ(cfg.thresholds.at("file_loc").source, ThresholdSource::PaperCited);
  EXPECT_EQ(cfg.thresholds.at("prototype_chain").source, ThresholdSource::Default);
}

TEST(Config, PatternListsExtendAndReplace) {
  auto cfg = AnalyzerConfig::defaults();
  size_t before = cfg.list("sensitive_names").entries.size();
  merge_config_json(cfg, R"({"pattern_lists": {
    "sensitive_names": ["pin"],
    "weak_algorithms": {"mode": "replace", "entries": ["/blowfish.*/"]}
  }})");
  EXPECT_EQ(cfg.list("sensitive_names").entries.size(), before + 1);
  EXPECT_EQ(cfg.list("weak_algorithms").entries, (std::vector<std::string>{"/blowfish.*/"}));
}

TEST(Config, Errors) {
  auto cfg = AnalyzerConfig::defaults();
  EXPECT_THROW(merge_config_json(cfg, "{"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, "[]"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, R"({"rules": {"JSSEC-099": false}})"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, R"({"thresholds": {"params": 0}})"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, R"({"thresholds": {"params": "5"}})"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, R"({"pattern_lists": {"sanitizers": ["/(unclosed/"]}})"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, R"({"profile": "desktop"})"), ConfigError);
  EXPECT_THROW(merge_config_json(cfg, R"({"rules": {"JSSEC-001": {"severity": "fatal"}}})"), ConfigError);
}

TEST(Config, UnknownKeysWarn) {
  auto cfg = AnalyzerConfig::defaults();
  merge_config_json(cfg, R"({"colour": true, "thresholds": {"depth": 3}})");
  EXPECT_EQ(cfg.warnings.size(), 2u);
}

TEST(Config, Profiles) {
  auto cfg = AnalyzerConfig::defaults();
  cfg.profile = Profile::Server;
  EXPECT_FALSE(cfg.rule_active("JSSEC-011"));
  EXPECT_FALSE(cfg.rule_active("JSSEC-012"));
  EXPECT_TRUE(cfg.rule_active("JSSEC-014"));
  EXPECT_TRUE(cfg.rule_active("JSSEC-023"));
  cfg.profile = Profile::Client;
  EXPECT_TRUE(cfg.rule_active("JSSEC-011"));
  for (const char* id : {"JSSEC-022", "JSSEC-023", "JSSEC-024"}) EXPECT_FALSE(cfg.rule_active(id)) << id;
}

TEST(Config, DigestTracksEffectiveConfig) {
  auto a = AnalyzerConfig::defaults();
  auto b = AnalyzerConfig::defaults();
  EXPECT_EQ(a.digest(), b.digest());
  EXPECT_EQ(a.digest().size(), 16u);
  merge_config_json(b, R"({"thresholds": {"params": 6}})");
  EXPECT_NE(a.digest(), b.digest());
  auto j = nlohmann::json::parse(a.to_json());
  EXPECT_TRUE(j.contains("thresholds"));
}

TEST(Config, SchemaIsJson) {
  auto schema = nlohmann::json::parse(config_schema());
  EXPECT_EQ(schema["type"], "object");
  EXPECT_TRUE(schema["properties"].contains("thresholds"));
}
