#include "jssec/source.hpp"

#include <algorithm>
#include <cassert>

namespace jssec {

std::vector<uint32_t> compute_line_offsets(std::string_view text) {
  std::vector<uint32_t> offsets{0};
  for (uint32_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') offsets.push_back(i + 1);
  }
  return offsets;
}

SourceFile::SourceFile(std::string p, std::string t)
    : path(std::move(p)), text(std::move(t)), line_offsets(compute_line_offsets(text)) {}

std::pair<uint32_t, uint32_t> SourceFile::line_col(uint32_t offset) const {
  offset = std::min<uint32_t>(offset, static_cast<uint32_t>(text.size()));
  auto it = std::upper_bound(line_offsets.begin(), line_offsets.end(), offset);
  auto line = static_cast<uint32_t>(it - line_offsets.begin());
  uint32_t col = 1;
  for (uint32_t i = line_offsets[line - 1]; i < offset; ++i) {
    // continuation bytes do not start a code point
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++col;
  }
  return {line, col};
}

std::string_view to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::JsFile: return "JsFile";
    case UnitKind::HtmlScriptBlock: return "HtmlScriptBlock";
    case UnitKind::HtmlInlineHandler: return "HtmlInlineHandler";
  }
  return "JsFile";
}

SourceUnit::SourceUnit(std::string id, UnitKind kind, std::string text,
                       std::shared_ptr<const SourceFile> origin, uint32_t ordinal,
                       std::vector<OffsetSegment> segments,
                       std::optional<HtmlContext> html_context)
    : id_(std::move(id)),
      kind_(kind),
      text_(std::move(text)),
      line_offsets_(compute_line_offsets(text_)),
      origin_(std::move(origin)),
      ordinal_(ordinal),
      segments_(std::move(segments)),
      html_context_(std::move(html_context)) {
  assert(!segments_.empty());
  assert(kind_ != UnitKind::HtmlInlineHandler || html_context_.has_value());
}

SourceUnit SourceUnit::from_js_file(std::shared_ptr<const SourceFile> file) {
  std::string text = file->text;
  std::string id = file->path;
  return SourceUnit(std::move(id), UnitKind::JsFile, std::move(text), std::move(file), 0);
}

uint32_t SourceUnit::to_origin_offset(uint32_t local) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), local,
                             [](uint32_t v, const OffsetSegment& s) { return v < s.local_start; });
  const auto& seg = *(it - 1);
  return seg.origin_start + (local - seg.local_start);
}

Span SourceUnit::span(uint32_t start, uint32_t end) const {
  Span s;
  s.unit_id = id_;
  s.start_byte = to_origin_offset(start);
  // an empty range maps its end onto its start so entity segments cannot invert it
  s.end_byte = end > start ? to_origin_offset(end - 1) + 1 : s.start_byte;
  auto [sl, sc] = origin_->line_col(s.start_byte);
  auto [el, ec] = origin_->line_col(s.end_byte);
  s.start_line = sl;
  s.start_col = sc;
  s.end_line = el;
  s.end_col = ec;
  return s;
}

uint32_t SourceUnit::local_line(uint32_t local_offset) const {
  auto it = std::upper_bound(line_offsets_.begin(), line_offsets_.end(), local_offset);
  return static_cast<uint32_t>(it - line_offsets_.begin());
}

}  // namespace jssec
