#include "jssec/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "jssec/glob.hpp"
#include "jssec/html.hpp"
#include "jssec/mapping.hpp"
#include "jssec/parser.hpp"
#include "jssec/patterns.hpp"
#include "jssec/rules.hpp"

namespace fs = std::filesystem;

namespace jssec {

bool AnalysisResult::has_rule_crash() const {
  return std::any_of(stats.rules.begin(), stats.rules.end(), [](const auto& kv) { return kv.second.crashes > 0; });
}

bool AnalysisResult::has_parse_failure() const {
  return std::any_of(skipped.begin(), skipped.end(), [](const SkippedUnit& s) { return s.parse_error; });
}

namespace {

template <typename Fn>
void parallel_for(size_t n, Fn fn) {
  size_t workers = std::min<size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct UnitState {
  const SourceUnit* unit = nullptr;
  std::optional<SyntaxTree> tree;
  std::optional<ScopeTable> scopes;
  UnitAnalysis analysis;
  std::optional<ParseDiagnostic> error;
  std::vector<Finding> findings;
  std::vector<Diagnostic> diagnostics;
  std::map<std::string, uint32_t> crashes;
};

// ---- suppressions ----

struct Suppression {
  std::set<std::string> rules;  // empty: every rule
  std::string reason;
  uint32_t line = 0;                // disable-line form
  uint32_t from = 0, to = 0;        // block form, origin bytes
  bool block = false;
};

bool covers(const Suppression& s, const Finding& f) {
  if (!s.rules.empty() && s.rules.count(f.rule_id) == 0) return false;
  if (s.block) return f.span.start_byte >= s.from && f.span.start_byte < s.to;
  return f.span.start_line == s.line;
}

std::vector<Suppression> collect_suppressions(UnitState& st) {
  std::vector<Suppression> out;
  if (!st.tree) return out;
  static const std::regex directive(R"(jssec-(disable-line|disable|enable)\b([\s\S]*))");
  static const std::regex rule_id(R"(JSSEC-[0-9]{3})");
  const SourceUnit& unit = *st.unit;
  std::optional<Suppression> open;
  auto origin_end = static_cast<uint32_t>(unit.origin().text.size());
  for (const Comment& c : st.tree->comments()) {
    std::string text = unit.text().substr(c.start, c.end - c.start);
    std::smatch m;
    if (!std::regex_search(text, m, directive)) continue;
    std::string kind = m[1];
    Span where = unit.span(c.start, c.end);
    if (kind == "enable") {
      if (open) {
        open->to = where.start_byte;
        out.push_back(*open);
        open.reset();
      }
      continue;
    }
    std::string rest = m[2];
    if (rest.size() >= 2 && rest.compare(rest.size() - 2, 2, "*/") == 0) rest.resize(rest.size() - 2);
    std::string ids = rest;
    std::string reason;
    if (auto at = rest.find("reason:"); at != std::string::npos) {
      ids = rest.substr(0, at);
      reason = rest.substr(at + 7);
      auto b = reason.find_first_not_of(" \t");
      auto e = reason.find_last_not_of(" \t\r\n");
      reason = b == std::string::npos ? "" : reason.substr(b, e - b + 1);
    }
    Suppression s;
    for (auto it = std::sregex_iterator(ids.begin(), ids.end(), rule_id); it != std::sregex_iterator(); ++it) {
      std::string id = it->str();
      if (find_rule(id) == nullptr) {
        st.diagnostics.push_back({unit.origin_path(), where.start_line, where.start_col, Severity::Warning,
                                  "unknown-rule", "suppression names unknown rule " + id, ""});
      }
      s.rules.insert(id);
    }
    s.reason = reason;
    if (reason.empty()) {
      st.diagnostics.push_back({unit.origin_path(), where.start_line, where.start_col, Severity::Info,
                                "suppression-without-reason", "suppression comment has no reason: text", ""});
    }
    if (kind == "disable-line") {
      s.line = where.start_line;
      out.push_back(s);
    } else {
      s.block = true;
      s.from = where.end_byte;
      s.to = origin_end;
      if (open) out.push_back(*open);
      open = s;
    }
  }
  if (open) {
    open->to = unit.to_origin_offset(static_cast<uint32_t>(unit.text().size())) + 1;
    out.push_back(*open);
  }
  return out;
}

void prepare(UnitState& st) {
  ParseResult pr = parse_source(*st.unit);
  if (!pr.ok()) {
    st.error = pr.error;
    return;
  }
  st.tree = std::move(pr.tree);
  st.scopes = build_scope_table(*st.tree);
  const SyntaxTree& tree = *st.tree;
  UnitAnalysis& ua = st.analysis;
  ua.tree = &tree;
  ua.scopes = &*st.scopes;
  ua.functions = measure_functions(tree, *st.scopes, st.unit->line_offsets());
  ua.objects = measure_objects(tree, *st.scopes);
  ua.callbacks = find_callbacks(tree);
  ua.logical_loc = unit_logical_loc(tree, st.unit->line_offsets());
  ua.proto = collect_prototype_edges(tree, *st.scopes, st.unit->id());
  for (const auto& d : tree.diagnostics()) {
    Span s = st.unit->span(d.offset, d.offset);
    st.diagnostics.push_back({st.unit->origin_path(), s.start_line, s.start_col, Severity::Info, "newer-syntax",
                              d.message, ""});
  }
}

void run_rules(UnitState& st, const RunContext& ctx, const AnalyzerConfig& cfg,
               const std::vector<RuleEntry>& rules) {
  const bool parsed = st.tree.has_value();
  for (const RuleEntry& rule : rules) {
    if (!cfg.rule_active(rule.id)) continue;
    if (cfg.rule_excluded_for(rule.id, st.unit->origin_path())) continue;
    if (!parsed && !rule.runs_without_tree) continue;
    std::vector<Finding> found;
    try {
      rule.check(st.analysis, ctx, found);
    } catch (const std::exception& e) {
      ++st.crashes[rule.id];
      st.diagnostics.push_back({st.unit->origin_path(), 1, 1, Severity::Error, "rule-crash",
                                std::string(rule.id) + " failed on " + st.unit->id() + ": " + e.what(), rule.id});
      continue;
    }
    const auto& override_sev = cfg.rules.at(rule.id).severity;
    for (auto& f : found) {
      if (override_sev) f.severity = *override_sev;
      st.findings.push_back(std::move(f));
    }
  }
}

}  // namespace

AnalysisResult run_analysis(const std::vector<SourceUnit>& units, const AnalyzerConfig& cfg,
                            const std::vector<PageGroup>& pages) {
  return run_analysis_with_rules(units, cfg, pages, rule_registry());
}

AnalysisResult run_analysis_with_rules(const std::vector<SourceUnit>& units, const AnalyzerConfig& cfg,
                                       const std::vector<PageGroup>& pages, const std::vector<RuleEntry>& rules) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisResult result;
  result.config_digest = cfg.digest();
  result.profile = std::string(to_string(cfg.profile));
  for (const auto& r : rule_table()) result.stats.rules[r.id] = RuleStats{};

  std::vector<std::unique_ptr<UnitState>> states;
  for (const auto& u : units) {
    auto st = std::make_unique<UnitState>();
    st->unit = &u;
    st->analysis.unit = &u;
    states.push_back(std::move(st));
  }
  // stable unit order for every merge step
  std::sort(states.begin(), states.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a->unit->origin_path(), a->unit->ordinal(), a->unit->id()) <
           std::make_tuple(b->unit->origin_path(), b->unit->ordinal(), b->unit->id());
  });

  parallel_for(states.size(), [&](size_t i) { prepare(*states[i]); });

  CompiledPatterns patterns(cfg);
  RunContext ctx;
  ctx.cfg = &cfg;
  ctx.patterns = &patterns;

  std::set<std::string> declared_globals;
  std::map<std::string, std::vector<std::string>> unit_globals;
  for (const auto& st : states) {
    if (!st->scopes) continue;
    for (const auto& name : st->scopes->unresolved_names()) ctx.unresolved_reads.insert(name);
    if (st->unit->kind() == UnitKind::HtmlInlineHandler) continue;
    for (const auto& name : st->scopes->global_names()) {
      declared_globals.insert(name);
      const Binding* b = nullptr;
      auto it = st->scopes->scopes()[0].names.find(name);
      if (it != st->scopes->scopes()[0].names.end()) b = &st->scopes->bindings()[it->second];
      if (b != nullptr && b->kind != BindingKind::ImplicitGlobal) unit_globals[st->unit->id()].push_back(name);
    }
  }
  for (const auto& st : states) {
    if (st->tree) ctx.graph.add_unit(st->unit->id(), st->analysis.proto, declared_globals);
  }
  for (const auto& cycle : ctx.graph.cycles()) {
    std::string members;
    for (const auto& k : cycle) members += (members.empty() ? "" : ", ") + k;
    result.diagnostics.push_back({"", 0, 0, Severity::Warning, "prototype-cycle",
                                  "prototype inheritance cycle: " + members, ""});
  }

  // pages: explicit groups, else units sharing an origin file
  std::vector<PageGroup> groups = pages;
  if (groups.empty()) {
    std::map<std::string, PageGroup> by_file;
    for (const auto& st : states) {
      if (st->unit->kind() != UnitKind::JsFile) by_file[st->unit->origin_path()].push_back(st->unit->id());
    }
    for (auto& [path, g] : by_file) groups.push_back(std::move(g));
  }
  for (const auto& group : groups) {
    std::map<std::string, std::set<std::string>> declarers;
    for (const auto& id : group) {
      auto it = unit_globals.find(id);
      if (it == unit_globals.end()) continue;
      for (const auto& name : it->second) declarers[name].insert(id);
    }
    for (const auto& [name, ids] : declarers) {
      if (ids.size() < 2) continue;
      for (const auto& id : ids) ctx.global_collisions[id].insert(name);
    }
  }

  parallel_for(states.size(), [&](size_t i) { run_rules(*states[i], ctx, cfg, rules); });

  std::vector<Finding> all;
  for (auto& st : states) {
    result.stats.units++;
    if (st->tree) result.stats.parsed_units++;
    if (st->error) {
      Span s = st->unit->span(st->error->offset, st->error->offset);
      result.skipped.push_back({st->unit->origin_path(), st->unit->id(), "syntax error: " + st->error->message,
                                s.start_line, s.start_col, true});
    }
    for (auto& [rule, n] : st->crashes) result.stats.rules[rule].crashes += n;
    std::move(st->diagnostics.begin(), st->diagnostics.end(), std::back_inserter(result.diagnostics));
    st->diagnostics.clear();
    auto sups = collect_suppressions(*st);
    std::move(st->diagnostics.begin(), st->diagnostics.end(), std::back_inserter(result.diagnostics));
    st->diagnostics.clear();
    for (auto& f : st->findings) {
      for (const auto& s : sups) {
        if (covers(s, f)) {
          f.suppression_reason = s.reason.empty() ? "(no reason given)" : s.reason;
          break;
        }
      }
      all.push_back(std::move(f));
    }
  }
  std::sort(all.begin(), all.end(), finding_less);
  all.erase(std::unique(all.begin(), all.end(), same_rule_and_span), all.end());
  for (auto& f : all) {
    if (f.suppression_reason.empty()) {
      result.stats.rules[f.rule_id].findings++;
      result.findings.push_back(std::move(f));
    } else {
      result.stats.rules[f.rule_id].suppressed++;
      result.suppressed.push_back(std::move(f));
    }
  }
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.path, a.line, a.col, a.code, a.message) < std::tie(b.path, b.line, b.col, b.code, b.message);
  });
  std::set<std::string> files;
  for (const auto& u : units) files.insert(u.origin_path());
  result.stats.files = static_cast<uint32_t>(files.size());
  result.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

bool is_html_path(const std::string& path) {
  auto ext = fs::path(path).extension().string();
  ext = to_lower(ext);
  return ext == ".html" || ext == ".htm";
}

namespace {

bool is_source_path(const std::string& path) {
  auto ext = to_lower(fs::path(path).extension().string());
  return ext == ".js" || ext == ".mjs" || ext == ".cjs" || ext == ".html" || ext == ".htm";
}

bool excluded(const AnalyzerConfig& cfg, const std::string& display) {
  return std::any_of(cfg.path_excludes.begin(), cfg.path_excludes.end(),
                     [&](const std::string& g) { return glob_match(g, display); });
}

std::string display_of(const fs::path& p) {
  std::error_code ec;
  fs::path abs = fs::absolute(p, ec).lexically_normal();
  fs::path cwd = fs::current_path(ec);
  fs::path rel = abs.lexically_relative(cwd);
  if (rel.empty()) rel = p;
  return rel.generic_string();
}

void walk_dir(const fs::path& dir, const AnalyzerConfig& cfg, std::vector<DiscoveredFile>& out) {
  std::vector<fs::directory_entry> entries;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) entries.push_back(*it);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.path().filename() < b.path().filename(); });
  for (const auto& e : entries) {
    std::string display = display_of(e.path());
    if (e.is_directory(ec)) {
      if (excluded(cfg, display + "/")) continue;
      walk_dir(e.path(), cfg, out);
    } else if (e.is_regular_file(ec) && is_source_path(display) && !excluded(cfg, display)) {
      out.push_back({display, e.path().string()});
    }
  }
}

bool has_glob(const std::string& s) { return s.find_first_of("*?[") != std::string::npos; }

}  // namespace

std::vector<DiscoveredFile> discover_inputs(const std::vector<std::string>& inputs, const AnalyzerConfig& cfg,
                                            std::vector<std::string>& errors) {
  std::vector<DiscoveredFile> out;
  for (const auto& in : inputs) {
    if (in == "-") {
      out.push_back({"<stdin>", "-"});
      continue;
    }
    std::error_code ec;
    if (has_glob(in)) {
      // walk from the literal directory prefix, keep matches
      std::string prefix = in.substr(0, in.find_first_of("*?["));
      auto slash = prefix.rfind('/');
      fs::path root = slash == std::string::npos ? fs::path(".") : fs::path(prefix.substr(0, slash + 1));
      std::vector<DiscoveredFile> found;
      if (fs::is_directory(root, ec)) walk_dir(root, cfg, found);
      std::string pattern = display_of(root) == "." ? in : in;
      size_t before = out.size();
      for (auto& f : found) {
        if (glob_match(pattern, f.display_path) || glob_match(pattern, f.fs_path)) out.push_back(std::move(f));
      }
      if (out.size() == before) errors.push_back("no files match " + in);
      continue;
    }
    fs::path p(in);
    if (fs::is_directory(p, ec)) {
      walk_dir(p, cfg, out);
    } else if (fs::is_regular_file(p, ec)) {
      out.push_back({display_of(p), p.string()});
    } else {
      errors.push_back("no such file or directory: " + in);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.display_path < b.display_path; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) { return a.display_path == b.display_path; }),
            out.end());
  return out;
}

bool looks_minified(const std::string& text) {
  if (text.size() > 5u * 1024u * 1024u) return true;
  size_t lines = static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
  if (!text.empty() && text.back() != '\n') ++lines;
  if (lines == 0) return false;
  return text.size() / lines > 5000;
}

std::vector<SourceUnit> units_for_file(std::shared_ptr<const SourceFile> file) {
  if (is_html_path(file->path)) return extract_scripts_from_html(file).units;
  std::vector<SourceUnit> units;
  units.push_back(SourceUnit::from_js_file(std::move(file)));
  return units;
}

namespace {

std::string resolve_src(const std::string& html_display, const std::string& src) {
  if (src.find("://") != std::string::npos || src.rfind("//", 0) == 0 || src.empty()) return {};
  std::string clean = src.substr(0, src.find_first_of("?#"));
  fs::path base = fs::path(html_display).parent_path();
  fs::path joined = clean[0] == '/' ? fs::path(clean.substr(1)) : base / clean;
  return joined.lexically_normal().generic_string();
}

}  // namespace

AnalysisResult analyze_files(const std::vector<DiscoveredFile>& files, const AnalyzerConfig& cfg) {
  std::vector<SourceUnit> units;
  std::vector<SkippedUnit> gated;
  std::vector<Diagnostic> read_errors;
  std::map<std::string, std::vector<std::string>> page_scripts;  // html path -> referenced js paths
  std::set<std::string> js_paths;
  for (const auto& f : files) {
    std::string text;
    if (f.fs_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(f.fs_path, std::ios::binary);
      if (!in) {
        read_errors.push_back({f.display_path, 0, 0, Severity::Error, "read-error", "cannot read file", ""});
        continue;
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    if (!cfg.include_minified && looks_minified(text)) {
      gated.push_back({f.display_path, f.display_path, "likely minified or generated; use --include-minified", 0, 0,
                       false});
      continue;
    }
    auto file = std::make_shared<const SourceFile>(f.display_path, std::move(text));
    if (is_html_path(f.display_path)) {
      auto ex = extract_scripts_from_html(file);
      for (const auto& s : ex.external_scripts) {
        std::string target = resolve_src(f.display_path, s.src);
        if (!target.empty()) page_scripts[f.display_path].push_back(target);
      }
      std::move(ex.units.begin(), ex.units.end(), std::back_inserter(units));
    } else {
      js_paths.insert(f.display_path);
      units.push_back(SourceUnit::from_js_file(file));
    }
  }
  std::vector<PageGroup> pages;
  std::map<std::string, PageGroup> by_file;
  for (const auto& u : units) {
    if (u.kind() != UnitKind::JsFile) by_file[u.origin_path()].push_back(u.id());
  }
  for (auto& [html, group] : by_file) {
    for (const auto& js : page_scripts[html]) {
      if (js_paths.count(js) != 0) group.push_back(js);
    }
    pages.push_back(group);
  }
  AnalysisResult result = run_analysis(units, cfg, pages);
  result.stats.files += static_cast<uint32_t>(gated.size());
  for (auto& g : gated) result.skipped.push_back(std::move(g));
  for (auto& d : read_errors) result.diagnostics.push_back(std::move(d));
  std::sort(result.skipped.begin(), result.skipped.end(),
            [](const SkippedUnit& a, const SkippedUnit& b) { return std::tie(a.path, a.unit_id) < std::tie(b.path, b.unit_id); });
  return result;
}

AnalysisResult analyze_text(const std::string& path, const std::string& text, const AnalyzerConfig& cfg) {
  auto file = std::make_shared<const SourceFile>(path, text);
  auto units = units_for_file(file);
  return run_analysis(units, cfg);
}

void apply_baseline(AnalysisResult& result, const std::string& baseline_json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(baseline_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("baseline is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("findings") || !doc["findings"].is_array())
    throw std::runtime_error("baseline has no findings array");
  std::map<std::tuple<std::string, std::string, std::string, std::string>, int> known;
  for (const auto& f : doc["findings"]) {
    known[{f.value("rule_id", ""), f.value("path", ""), f.value("sub_code", ""), f.value("message", "")}]++;
  }
  std::vector<Finding> kept;
  for (auto& f : result.findings) {
    auto it = known.find({f.rule_id, f.path, f.sub_code, f.message});
    if (it != known.end() && it->second > 0) {
      --it->second;
      result.stats.rules[f.rule_id].findings--;
      continue;
    }
    kept.push_back(std::move(f));
  }
  result.findings = std::move(kept);
}

}  // namespace jssec
