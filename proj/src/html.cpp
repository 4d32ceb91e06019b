#include "jssec/html.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <optional>
#include <string_view>

#include "jssec/lexer.hpp"

namespace jssec {

namespace {

struct Attribute {
  std::string name;  // lowercased
  uint32_t value_start = 0;
  uint32_t value_end = 0;
  bool has_value = false;
};

struct Tag {
  std::string name;  // lowercased
  std::vector<Attribute> attrs;
  uint32_t start = 0;
  uint32_t end = 0;  // just past '>'
  bool self_closing = false;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

struct NamedEntity {
  std::string_view name;
  uint32_t cp;
};

constexpr NamedEntity kEntities[] = {
    {"amp", '&'},   {"lt", '<'},      {"gt", '>'},     {"quot", '"'},   {"apos", '\''},
    {"nbsp", 0xA0}, {"tab", '\t'},    {"newline", '\n'}, {"lpar", '('}, {"rpar", ')'},
    {"semi", ';'},  {"colon", ':'},   {"comma", ','},  {"period", '.'}, {"sol", '/'},
    {"equals", '='}, {"plus", '+'},   {"lsqb", '['},   {"rsqb", ']'},   {"lcub", '{'},
    {"rcub", '}'},  {"excl", '!'},    {"num", '#'},    {"dollar", '$'}, {"percnt", '%'},
    {"ast", '*'},   {"quest", '?'},   {"bsol", '\\'},  {"grave", '`'},  {"verbar", '|'},
};

/// Decodes one character reference at text[i] ('&'). Returns the number of
/// bytes consumed (0 when the text is not a recognised reference).
uint32_t decode_entity(std::string_view text, uint32_t i, uint32_t limit, std::string& out) {
  uint32_t j = i + 1;
  if (j < limit && text[j] == '#') {
    ++j;
    bool hex = j < limit && (text[j] == 'x' || text[j] == 'X');
    if (hex) ++j;
    uint32_t digits_start = j;
    uint32_t cp = 0;
    while (j < limit && (hex ? std::isxdigit(static_cast<unsigned char>(text[j]))
                             : std::isdigit(static_cast<unsigned char>(text[j])))) {
      char c = text[j];
      uint32_t d = std::isdigit(static_cast<unsigned char>(c))
                       ? static_cast<uint32_t>(c - '0')
                       : static_cast<uint32_t>(std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
      if (cp < 0x110000) cp = cp * (hex ? 16 : 10) + d;
      ++j;
    }
    if (j == digits_start) return 0;
    if (j < limit && text[j] == ';') ++j;
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    append_utf8(out, cp);
    return j - i;
  }
  uint32_t name_start = j;
  while (j < limit && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
  std::string_view name = text.substr(name_start, j - name_start);
  for (const auto& e : kEntities) {
    if (name == e.name) {
      if (j < limit && text[j] == ';') ++j;
      append_utf8(out, e.cp);
      return j - i;
    }
  }
  return 0;
}

/// Decodes [start, end) of the file, recording how decoded bytes map back.
std::pair<std::string, std::vector<OffsetSegment>> decode_attribute(std::string_view text,
                                                                    uint32_t start, uint32_t end) {
  std::string out;
  std::vector<OffsetSegment> segs{{0, start}};
  uint32_t i = start;
  while (i < end) {
    if (text[i] == '&') {
      uint32_t before = static_cast<uint32_t>(out.size());
      uint32_t used = decode_entity(text, i, end, out);
      if (used > 0) {
        if (segs.back().local_start == before) {
          segs.back().origin_start = i;
        } else {
          segs.push_back({before, i});
        }
        i += used;
        segs.push_back({static_cast<uint32_t>(out.size()), i});
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  // drop a trailing segment that starts at the end and maps nothing new
  if (segs.size() > 1 && segs.back().local_start == out.size()) segs.pop_back();
  return {std::move(out), std::move(segs)};
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  /// Parses a start tag at pos ('<' followed by a letter).
  std::optional<Tag> start_tag(uint32_t pos) {
    Tag tag;
    tag.start = pos;
    uint32_t i = pos + 1;
    uint32_t n = static_cast<uint32_t>(text_.size());
    uint32_t name_start = i;
    while (i < n && !is_space(text_[i]) && text_[i] != '>' && text_[i] != '/') ++i;
    tag.name = lower(text_.substr(name_start, i - name_start));
    while (i < n) {
      while (i < n && (is_space(text_[i]) || text_[i] == '/')) {
        if (text_[i] == '/' && i + 1 < n && text_[i + 1] == '>') {
          tag.self_closing = true;
          break;
        }
        ++i;
      }
      if (i >= n) break;
      if (text_[i] == '>') {
        tag.end = i + 1;
        return tag;
      }
      if (text_[i] == '/' && i + 1 < n && text_[i + 1] == '>') {
        tag.end = i + 2;
        return tag;
      }
      Attribute attr;
      uint32_t an = i;
      while (i < n && !is_space(text_[i]) && text_[i] != '>' && text_[i] != '=' &&
             !(text_[i] == '/' && i + 1 < n && text_[i + 1] == '>')) {
        ++i;
      }
      if (i == an) ++i;  // stray '=' etc.
      attr.name = lower(text_.substr(an, i - an));
      uint32_t k = i;
      while (k < n && is_space(text_[k])) ++k;
      if (k < n && text_[k] == '=') {
        i = k + 1;
        while (i < n && is_space(text_[i])) ++i;
        attr.has_value = true;
        if (i < n && (text_[i] == '"' || text_[i] == '\'')) {
          char q = text_[i];
          attr.value_start = i + 1;
          size_t close = text_.find(q, i + 1);
          if (close == std::string_view::npos) close = n;
          attr.value_end = static_cast<uint32_t>(close);
          i = static_cast<uint32_t>(std::min<size_t>(close + 1, n));
        } else {
          attr.value_start = i;
          while (i < n && !is_space(text_[i]) && text_[i] != '>') ++i;
          attr.value_end = i;
        }
      }
      tag.attrs.push_back(std::move(attr));
    }
    tag.end = n;
    return tag;
  }

  /// Offset of the `</name` that closes a raw-text element, or npos.
  size_t find_close(uint32_t from, std::string_view name) const {
    size_t i = from;
    while (true) {
      i = text_.find("</", i);
      if (i == std::string_view::npos) return i;
      if (i + 2 + name.size() <= text_.size() &&
          lower(text_.substr(i + 2, name.size())) == name) {
        size_t after = i + 2 + name.size();
        if (after >= text_.size() || is_space(text_[after]) || text_[after] == '>' ||
            text_[after] == '/') {
          return i;
        }
      }
      i += 2;
    }
  }

 private:
  std::string_view text_;
};

const Attribute* find_attr(const Tag& tag, std::string_view name) {
  for (const auto& a : tag.attrs) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

bool is_handler_name(std::string_view name) {
  if (name.size() < 3 || name[0] != 'o' || name[1] != 'n') return false;
  return std::all_of(name.begin() + 2, name.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool is_url_attribute(std::string_view name) {
  static constexpr std::string_view kNames[] = {"href", "src", "action", "formaction",
                                                "data", "xlink:href", "background", "poster"};
  return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

std::string unit_id(const std::string& path, uint32_t ordinal) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%04u", ordinal);
  return path + buf;
}

}  // namespace

bool is_javascript_mime(std::string_view type) {
  std::string t = lower(type);
  while (!t.empty() && is_space(t.back())) t.pop_back();
  size_t first = t.find_first_not_of(" \t\r\n\f");
  t = first == std::string::npos ? std::string() : t.substr(first);
  if (auto semi = t.find(';'); semi != std::string::npos) t.resize(semi);
  static constexpr std::string_view kTypes[] = {
      "",
      "module",
      "text/javascript",
      "application/javascript",
      "application/x-javascript",
      "text/ecmascript",
      "application/ecmascript",
      "text/x-javascript",
      "text/jscript",
      "text/livescript",
      "text/javascript1.0",
      "text/javascript1.1",
      "text/javascript1.2",
      "text/javascript1.3",
      "text/javascript1.4",
      "text/javascript1.5",
  };
  return std::find(std::begin(kTypes), std::end(kTypes), t) != std::end(kTypes);
}

HtmlExtraction extract_scripts_from_html(std::shared_ptr<const SourceFile> file) {
  HtmlExtraction out;
  std::string_view text = file->text;
  const uint32_t n = static_cast<uint32_t>(text.size());
  Scanner scanner(text);
  uint32_t ordinal = 0;
  uint32_t i = 0;

  auto add_attr_unit = [&](const Tag& tag, const Attribute& a, uint32_t skip_prefix_to) {
    auto [decoded, segs] = decode_attribute(text, a.value_start, a.value_end);
    if (skip_prefix_to > 0) {
      // drop the decoded prefix (e.g. "javascript:") and rebase the segments
      std::vector<OffsetSegment> rebased;
      for (size_t s = 0; s < segs.size(); ++s) {
        uint32_t seg_end = s + 1 < segs.size() ? segs[s + 1].local_start
                                                : static_cast<uint32_t>(decoded.size());
        if (seg_end <= skip_prefix_to) continue;
        uint32_t local = segs[s].local_start;
        uint32_t origin = segs[s].origin_start;
        if (local < skip_prefix_to) {
          origin += skip_prefix_to - local;
          local = skip_prefix_to;
        }
        rebased.push_back({local - skip_prefix_to, origin});
      }
      if (rebased.empty()) rebased.push_back({0, a.value_end});
      decoded = decoded.substr(skip_prefix_to);
      segs = std::move(rebased);
    }
    ++ordinal;
    out.units.emplace_back(unit_id(file->path, ordinal), UnitKind::HtmlInlineHandler,
                           std::move(decoded), file, ordinal, std::move(segs),
                           HtmlContext{tag.name, a.name});
  };

  while (i < n) {
    size_t lt = text.find('<', i);
    if (lt == std::string_view::npos) break;
    i = static_cast<uint32_t>(lt);
    if (text.substr(i, 4) == "<!--") {
      size_t close = text.find("-->", i + 4);
      i = close == std::string_view::npos ? n : static_cast<uint32_t>(close + 3);
      continue;
    }
    if (i + 1 < n && (text[i + 1] == '!' || text[i + 1] == '?' || text[i + 1] == '/')) {
      size_t close = text.find('>', i + 1);
      i = close == std::string_view::npos ? n : static_cast<uint32_t>(close + 1);
      continue;
    }
    if (i + 1 >= n || !std::isalpha(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      continue;
    }
    std::optional<Tag> tag = scanner.start_tag(i);
    i = tag->end;

    for (const Attribute& a : tag->attrs) {
      if (!a.has_value) continue;
      if (is_handler_name(a.name)) {
        add_attr_unit(*tag, a, 0);
      } else if (is_url_attribute(a.name)) {
        auto decoded = decode_attribute(text, a.value_start, a.value_end).first;
        size_t p = 0;
        while (p < decoded.size() && (is_space(decoded[p]) || static_cast<unsigned char>(decoded[p]) < 0x20))
          ++p;
        if (lower(std::string_view(decoded).substr(p, 11)) == "javascript:") {
          add_attr_unit(*tag, a, static_cast<uint32_t>(p + 11));
        }
      }
    }

    if (tag->name == "script" && !tag->self_closing) {
      size_t close = scanner.find_close(i, "script");
      uint32_t body_end = close == std::string_view::npos ? n : static_cast<uint32_t>(close);
      const Attribute* src = find_attr(*tag, "src");
      const Attribute* type = find_attr(*tag, "type");
      if (src != nullptr) {
        ExternalScript ext;
        ext.src = decode_attribute(text, src->value_start, src->value_end).first;
        ext.offset = tag->start;
        auto [line, col] = file->line_col(tag->start);
        ext.line = line;
        ext.col = col;
        out.external_scripts.push_back(std::move(ext));
      } else if (type == nullptr ||
                 is_javascript_mime(text.substr(type->value_start, type->value_end - type->value_start))) {
        ++ordinal;
        out.units.emplace_back(unit_id(file->path, ordinal), UnitKind::HtmlScriptBlock,
                               std::string(text.substr(i, body_end - i)), file, ordinal,
                               std::vector<OffsetSegment>{{0, i}});
      }
      i = body_end;
    } else if (tag->name == "style" || tag->name == "textarea" || tag->name == "title" ||
               tag->name == "xmp") {
      size_t close = scanner.find_close(i, tag->name);
      i = close == std::string_view::npos ? n : static_cast<uint32_t>(close);
    }
  }
  return out;
}

HtmlExtraction extract_scripts_from_html(const std::string& path, std::string html_text) {
  return extract_scripts_from_html(std::make_shared<const SourceFile>(path, std::move(html_text)));
}

}  // namespace jssec
