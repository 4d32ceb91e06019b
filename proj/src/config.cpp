#include "jssec/config.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "jssec/glob.hpp"
#include "jssec/mapping.hpp"

namespace jssec {

using nlohmann::json;

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::All: return "all";
    case Profile::Client: return "client";
    case Profile::Server: return "server";
  }
  return "all";
}

std::optional<Profile> parse_profile(std::string_view s) {
  if (s == "all") return Profile::All;
  if (s == "client") return Profile::Client;
  if (s == "server") return Profile::Server;
  return std::nullopt;
}

std::string_view to_string(ThresholdSource s) {
  return s == ThresholdSource::PaperCited ? "PaperCited" : "Default";
}

namespace {

struct ThresholdDefault {
  const char* name;
  uint32_t value;
  ThresholdSource source;
};

const ThresholdDefault kThresholds[] = {
    {"large_object", 20, ThresholdSource::Default},
    {"function_loc", 50, ThresholdSource::Default},
    {"file_loc", 1000, ThresholdSource::PaperCited},
    {"params", 5, ThresholdSource::Default},
    {"callbacks", 3, ThresholdSource::Default},
    {"globals", 10, ThresholdSource::Default},
    {"dom_calls", 5, ThresholdSource::Default},
    {"prototype_chain", 7, ThresholdSource::PaperCited},
};

struct ListDefault {
  const char* name;
  std::vector<std::string> entries;
};

const std::vector<ListDefault>& list_defaults() {
  static const std::vector<ListDefault> lists = {
      {"sensitive_names",
       {"user", "username", "uname", "password", "passwd", "pwd", "key", "secret", "token", "apikey",
        "credential", "credentials", "privatekey", "secretkey", "accesskey", "authtoken", "passphrase",
        "clientsecret"}},
      {"sensitive_name_allowlist",
       {"passwordField", "passwordInput", "passwordLabel", "keyCode", "keyName", "tokenType",
        "userAgent", "userField", "usernameField", "usernameInput"}},
      {"secret_placeholders", {"", "changeme", "TODO"}},
      {"weak_algorithms",
       {"md2", "md4", "md5", "md6", "haval128", "hmacmd5", "dsa", "ripemd", "ripemd128", "ripemd160",
        "sha1", "des", "rc2", "rc4", "aesecb", "/aes(128|192|256)?ecb/"}},
      {"crypto_sinks",
       {"createHash", "createHmac", "createCipher", "createCipheriv", "createDecipher",
        "createDecipheriv", "createSign", "createVerify", "subtle.digest", "subtle.encrypt",
        "subtle.decrypt", "subtle.sign", "subtle.verify", "subtle.importKey", "subtle.generateKey"}},
      {"debug_calls",
       {"console.log", "console.debug", "console.error", "console.info", "console.trace", "console.dir",
        "alert", "window.alert"}},
      {"dom_construction_calls", {"createElement", "createTextNode", "appendChild", "insertAdjacentHTML"}},
      {"sanitizers",
       {"escape", "escapeHtml", "sanitize", "encodeURIComponent", "encodeURI", "DOMPurify.sanitize",
        "filterXSS", "xss", "validator.escape", "basename", "parseInt", "parseFloat", "Number", "/sanitiz.*/", "/escape.*/", "/encode(html|uri).*/"}},
      {"taint_sources",
       {"location", "location.*", "window.location", "window.location.*", "document.location",
        "document.location.*", "document.URL", "document.documentURI", "document.baseURI",
        "document.cookie", "document.referrer", "window.name", "req.query", "req.query.*", "req.params",
        "req.params.*", "req.body", "req.body.*", "req.headers", "req.headers.*", "req.cookies",
        "req.cookies.*", "request.query", "request.query.*", "request.params", "request.params.*",
        "request.body", "request.body.*"}},
      {"fs_sinks",
       {"readFile", "readFileSync", "writeFile", "writeFileSync", "appendFile", "appendFileSync",
        "createReadStream", "createWriteStream", "unlink", "unlinkSync", "rename", "renameSync",
        "copyFile", "copyFileSync", "rm", "rmSync", "mkdir", "mkdirSync", "fs.open", "fs.openSync",
        "sendFile", "res.download"}},
      {"upload_fields", {"originalname", "originalFilename", "file.name", "upload.name", "file.mimetype"}},
      {"logger_paths", {"console.*"}},
      {"response_sinks",
       {"res.send", "res.json", "res.end", "res.write", "res.jsonp", "response.send", "response.json",
        "response.end", "response.write"}},
  };
  return lists;
}

bool is_rule_id(const std::string& id) { return find_rule(id) != nullptr; }

void check_regex(const std::string& list, const std::string& entry) {
  if (entry.size() >= 2 && entry.front() == '/' && entry.back() == '/') {
    try {
      std::regex re(entry.substr(1, entry.size() - 2), std::regex::icase);
    } catch (const std::regex_error& e) {
      throw ConfigError("pattern_lists." + list + ": invalid regular expression " + entry);
    }
  }
}

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ConfigError(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

bool get_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw ConfigError(where + ": expected true or false");
  return v.get<bool>();
}

}  // namespace

const std::vector<std::string>& threshold_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& t : kThresholds) v.emplace_back(t.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& pattern_list_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& l : list_defaults()) v.emplace_back(l.name);
    return v;
  }();
  return names;
}

AnalyzerConfig AnalyzerConfig::defaults() {
  AnalyzerConfig cfg;
  for (const auto& r : rule_table()) cfg.rules[r.id] = RuleSettings{};
  cfg.rules["JSSEC-013"].excludes = {"tests/**"};
  for (const auto& t : kThresholds) cfg.thresholds[t.name] = Threshold{t.name, t.value, t.source};
  for (const auto& l : list_defaults()) cfg.pattern_lists[l.name] = PatternList{l.name, l.entries};
  cfg.path_excludes = {"**/node_modules/**", "**/dist/**", "**/*.min.js"};
  return cfg;
}

uint32_t AnalyzerConfig::threshold(const std::string& name) const {
  auto it = thresholds.find(name);
  if (it == thresholds.end()) throw std::out_of_range("unknown threshold " + name);
  return it->second.value;
}

const PatternList& AnalyzerConfig::list(const std::string& name) const {
  auto it = pattern_lists.find(name);
  if (it == pattern_lists.end()) throw std::out_of_range("unknown pattern list " + name);
  return it->second;
}

bool AnalyzerConfig::rule_active(const std::string& id) const {
  auto it = rules.find(id);
  if (it == rules.end() || !it->second.enabled) return false;
  if (profile == Profile::Client) {
    return id != "JSSEC-022" && id != "JSSEC-023" && id != "JSSEC-024";
  }
  if (profile == Profile::Server) {
    return id != "JSSEC-011" && id != "JSSEC-012";
  }
  return true;
}

bool AnalyzerConfig::rule_excluded_for(const std::string& id, const std::string& path) const {
  auto it = rules.find(id);
  if (it == rules.end()) return false;
  return std::any_of(it->second.excludes.begin(), it->second.excludes.end(),
                     [&](const std::string& g) { return glob_match(g, path); });
}

std::string AnalyzerConfig::to_json() const {
  json j;
  json rj = json::object();
  for (const auto& [id, s] : rules) {
    json r;
    r["enabled"] = s.enabled;
    r["exclude"] = s.excludes;
    if (s.severity) r["severity"] = std::string(to_string(*s.severity));
    rj[id] = r;
  }
  j["rules"] = rj;
  json tj = json::object();
  for (const auto& [name, t] : thresholds) {
    tj[name] = {{"value", t.value}, {"source", std::string(to_string(t.source))}};
  }
  j["thresholds"] = tj;
  json lj = json::object();
  for (const auto& [name, l] : pattern_lists) lj[name] = l.entries;
  j["pattern_lists"] = lj;
  j["profile"] = std::string(to_string(profile));
  j["path_excludes"] = path_excludes;
  j["strict_parse"] = strict_parse;
  j["strict_http"] = strict_http;
  j["include_minified"] = include_minified;
  return j.dump();
}

std::string AnalyzerConfig::digest() const {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json())));
  return buf;
}

void merge_config_json(AnalyzerConfig& cfg, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key == "rules") {
      if (!value.is_object()) throw ConfigError("rules: expected an object");
      for (const auto& [id, setting] : value.items()) {
        if (!is_rule_id(id)) throw ConfigError("rules: unknown rule id " + id);
        RuleSettings& rs = cfg.rules[id];
        if (setting.is_boolean()) {
          rs.enabled = setting.get<bool>();
        } else if (setting.is_object()) {
          for (const auto& [k, v] : setting.items()) {
            if (k == "enabled") {
              rs.enabled = get_bool(v, "rules." + id + ".enabled");
            } else if (k == "severity") {
              auto sev = v.is_string() ? parse_severity(v.get<std::string>()) : std::nullopt;
              if (!sev) throw ConfigError("rules." + id + ".severity: expected info, warning or error");
              rs.severity = sev;
            } else if (k == "exclude") {
              rs.excludes = string_list(v, "rules." + id + ".exclude");
            } else {
              cfg.warnings.push_back("unknown key rules." + id + "." + k);
            }
          }
        } else {
          throw ConfigError("rules." + id + ": expected a boolean or an object");
        }
      }
    } else if (key == "thresholds") {
      if (!value.is_object()) throw ConfigError("thresholds: expected an object");
      for (const auto& [name, v] : value.items()) {
        auto it = cfg.thresholds.find(name);
        if (it == cfg.thresholds.end()) {
          cfg.warnings.push_back("unknown threshold " + name);
          continue;
        }
        if (!v.is_number_integer() || v.get<int64_t>() <= 0 || v.get<int64_t>() > UINT32_MAX) {
          throw ConfigError("thresholds." + name + ": expected a positive integer");
        }
        auto nv = static_cast<uint32_t>(v.get<int64_t>());
        if (nv != it->second.value) it->second.source = ThresholdSource::Default;
        it->second.value = nv;
      }
    } else if (key == "pattern_lists") {
      if (!value.is_object()) throw ConfigError("pattern_lists: expected an object");
      for (const auto& [name, v] : value.items()) {
        auto it = cfg.pattern_lists.find(name);
        if (it == cfg.pattern_lists.end()) {
          cfg.warnings.push_back("unknown pattern list " + name);
          continue;
        }
        std::string mode = "extend";
        std::vector<std::string> entries;
        if (v.is_array()) {
          entries = string_list(v, "pattern_lists." + name);
        } else if (v.is_object()) {
          for (const auto& [k, kv] : v.items()) {
            if (k == "mode") {
              if (!kv.is_string() || (kv != "extend" && kv != "replace"))
                throw ConfigError("pattern_lists." + name + ".mode: expected extend or replace");
              mode = kv.get<std::string>();
            } else if (k == "entries") {
              entries = string_list(kv, "pattern_lists." + name + ".entries");
            } else {
              cfg.warnings.push_back("unknown key pattern_lists." + name + "." + k);
            }
          }
        } else {
          throw ConfigError("pattern_lists." + name + ": expected an array or an object");
        }
        for (const auto& e : entries) check_regex(name, e);
        if (mode == "replace") {
          if (entries.empty()) throw ConfigError("pattern_lists." + name + ": replacement list is empty");
          it->second.entries = entries;
        } else {
          for (auto& e : entries) {
            if (std::find(it->second.entries.begin(), it->second.entries.end(), e) == it->second.entries.end())
              it->second.entries.push_back(e);
          }
        }
      }
    } else if (key == "profile") {
      auto p = value.is_string() ? parse_profile(value.get<std::string>()) : std::nullopt;
      if (!p) throw ConfigError("profile: expected all, client or server");
      cfg.profile = *p;
    } else if (key == "path_excludes") {
      cfg.path_excludes = string_list(value, "path_excludes");
    } else if (key == "strict_parse") {
      cfg.strict_parse = get_bool(value, key);
    } else if (key == "strict_http") {
      cfg.strict_http = get_bool(value, key);
    } else if (key == "include_minified") {
      cfg.include_minified = get_bool(value, key);
    } else if (key == "$schema") {
      // editors may point at the shipped schema
    } else {
      cfg.warnings.push_back("unknown key " + key);
    }
  }
}

AnalyzerConfig load_config(const std::optional<std::string>& path) {
  AnalyzerConfig cfg = AnalyzerConfig::defaults();
  std::optional<std::string> file = path;
  if (!file || file->empty()) {
    const char* env = std::getenv("JSSEC_CONFIG");
    if (env != nullptr && *env != '\0') file = std::string(env);
    else file.reset();
  }
  if (!file) return cfg;
  std::ifstream in(*file, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + *file);
  std::stringstream ss;
  ss << in.rdbuf();
  merge_config_json(cfg, ss.str());
  return cfg;
}

}  // namespace jssec
