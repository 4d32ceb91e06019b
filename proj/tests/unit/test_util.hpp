#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jssec/config.hpp"
#include "jssec/engine.hpp"
#include "jssec/parser.hpp"
#include "jssec/source.hpp"

namespace jssec::testing {

/// A parsed script kept alive together with its source.
struct Parsed {
  std::shared_ptr<const SourceFile> file;
  std::unique_ptr<SourceUnit> unit;
  ParseResult result;

  const SyntaxTree& tree() const { return *result.tree; }
};

inline std::unique_ptr<Parsed> parse(const std::string& text) {
  auto p = std::make_unique<Parsed>();
  p->file = std::make_shared<const SourceFile>("test.js", text);
  p->unit = std::make_unique<SourceUnit>(SourceUnit::from_js_file(p->file));
  p->result = parse_source(*p->unit);
  return p;
}

inline const Node* first_of(const SyntaxTree& tree, NodeKind kind) {
  for (const Node& n : tree.nodes()) {
    if (n.kind == kind) return &n;
  }
  return nullptr;
}

inline size_t count_of(const SyntaxTree& tree, NodeKind kind) {
  size_t c = 0;
  for (const Node& n : tree.nodes()) c += n.kind == kind ? 1 : 0;
  return c;
}

inline std::vector<Finding> findings_for(const std::string& rule, const std::string& text,
                                         const std::string& path = "test.js",
                                         const AnalyzerConfig& cfg = AnalyzerConfig::defaults()) {
  auto r = analyze_text(path, text, cfg);
  std::vector<Finding> out;
  for (auto& f : r.findings) {
    if (f.rule_id == rule) out.push_back(f);
  }
  return out;
}

inline std::vector<uint32_t> lines_of(const std::vector<Finding>& fs) {
  std::vector<uint32_t> out;
  for (const auto& f : fs) out.push_back(f.span.start_line);
  return out;
}

}  // namespace jssec::testing
